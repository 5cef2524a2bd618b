#include "fracrough/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>

namespace fracrough {

namespace {

// int_{x0}^{x1} x^a (1-x)^b dx on [0,1] coordinates.
double power_pair_integral(double a, double b, double x0, double x1) {
    if (x1 <= x0) return 0.0;
    if (b == 0.0) {
        return (std::pow(x1, a + 1.0) - std::pow(x0, a + 1.0)) / (a + 1.0);
    }
    if (a == 0.0) {
        return (std::pow(1.0 - x0, b + 1.0) - std::pow(1.0 - x1, b + 1.0)) / (b + 1.0);
    }
    // Non-normalised incomplete beta differences.
    const double hi = (x1 >= 1.0) ? beta_fn(a + 1.0, b + 1.0)
                                  : boost::math::beta(a + 1.0, b + 1.0, x1);
    const double lo = (x0 <= 0.0) ? 0.0 : boost::math::beta(a + 1.0, b + 1.0, x0);
    return hi - lo;
}

}  // namespace

void weight_moments(const PowerWeight& w, double c, double d, double mu[3]) {
    mu[0] = mu[1] = mu[2] = 0.0;
    if (d <= c) return;
    const bool left = (w.g1 != 0.0), right = (w.g2 != 0.0);
    if (!left && !right) {
        const double h = d - c;
        mu[0] = h;
        mu[1] = h * h / 2.0;
        mu[2] = h * h * h / 3.0;
        return;
    }
    if (left && !right) {
        // (u-p)^g1; expand (u-c)^k = ((u-p) - (c-p))^k.
        const double cp = c - w.p, dp = d - w.p;
        double s[3];
        for (int k = 0; k < 3; ++k)
            s[k] = (std::pow(dp, w.g1 + k + 1.0) - std::pow(cp, w.g1 + k + 1.0)) / (w.g1 + k + 1.0);
        mu[0] = s[0];
        mu[1] = s[1] - cp * s[0];
        mu[2] = s[2] - 2.0 * cp * s[1] + cp * cp * s[0];
        return;
    }
    if (!left && right) {
        // (q-u)^g2; expand (u-c)^k = ((q-c) - (q-u))^k.
        const double qc = w.q - c, qd = w.q - d;
        double s[3];
        for (int k = 0; k < 3; ++k)
            s[k] = (std::pow(qc, w.g2 + k + 1.0) - std::pow(qd, w.g2 + k + 1.0)) / (w.g2 + k + 1.0);
        mu[0] = s[0];
        mu[1] = qc * s[0] - s[1];
        mu[2] = qc * qc * s[0] - 2.0 * qc * s[1] + s[2];
        return;
    }
    // Both powers active: scale to x = (u-p)/(q-p).
    const double L = w.q - w.p;
    const double x0 = (c - w.p) / L, x1 = (d - w.p) / L, xc = x0;
    double I0 = power_pair_integral(w.g1, w.g2, x0, x1);
    double I1 = power_pair_integral(w.g1 + 1.0, w.g2, x0, x1);
    double I2 = power_pair_integral(w.g1 + 2.0, w.g2, x0, x1);
    const double scale = std::pow(L, w.g1 + w.g2 + 1.0);
    mu[0] = scale * I0;
    mu[1] = scale * L * (I1 - xc * I0);
    mu[2] = scale * L * L * (I2 - 2.0 * xc * I1 + xc * xc * I0);
}

double integrate_quadratic(const PowerWeight& w, double c, double d, double gc, double gm,
                           double gd) {
    if (d <= c) return 0.0;
    double mu[3];
    weight_moments(w, c, d, mu);
    const double h = d - c;
    const double a0 = gc;
    const double a1 = (-3.0 * gc + 4.0 * gm - gd) / h;
    const double a2 = 2.0 * (gc - 2.0 * gm + gd) / (h * h);
    return a0 * mu[0] + a1 * mu[1] + a2 * mu[2];
}

double integrate_linear(const PowerWeight& w, double c, double d, double gc, double gd) {
    if (d <= c) return 0.0;
    double mu[3];
    weight_moments(w, c, d, mu);
    const double a1 = (gd - gc) / (d - c);
    return gc * mu[0] + a1 * mu[1];
}

double integrate_vanishing_right(double q, double g, double c, double Nc, double Nm) {
    const double h = q - c;
    if (h <= 0.0) return 0.0;
    // N(s) = b1 s + b2 s^2 in s = q - u.
    const double b1 = (4.0 * Nm - Nc) / h;
    const double b2 = 2.0 * (Nc - 2.0 * Nm) / (h * h);
    return b1 * std::pow(h, g + 2.0) / (g + 2.0) + b2 * std::pow(h, g + 3.0) / (g + 3.0);
}

double integrate_vanishing_left(double p, double g, double d, double Nm, double Nd) {
    const double h = d - p;
    if (h <= 0.0) return 0.0;
    const double b1 = (4.0 * Nm - Nd) / h;
    const double b2 = 2.0 * (Nd - 2.0 * Nm) / (h * h);
    return b1 * std::pow(h, g + 2.0) / (g + 2.0) + b2 * std::pow(h, g + 3.0) / (g + 3.0);
}

std::vector<double> graded_mesh(double a, double b, int m, double grading, bool grade_at_a) {
    require_arg(m >= 1 && b > a, "graded_mesh: bad arguments");
    std::vector<double> nodes(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double s = std::pow(double(i) / m, grading);
        nodes[i] = grade_at_a ? a + (b - a) * s : b - (b - a) * s;
    }
    if (!grade_at_a) std::reverse(nodes.begin(), nodes.end());
    nodes.front() = a;
    nodes.back() = b;
    return nodes;
}

std::vector<double> graded_mesh_two_sided(double a, double b, int m_half, double grading) {
    const double mid = 0.5 * (a + b);
    auto lo = graded_mesh(a, mid, m_half, grading, true);
    auto hi = graded_mesh(mid, b, m_half, grading, false);
    lo.insert(lo.end(), hi.begin() + 1, hi.end());
    return lo;
}

std::vector<int> coarsened_index_mesh(int i0, int i1, bool fine_at_lo, bool fine_at_hi) {
    require_arg(i1 > i0, "coarsened_index_mesh: empty range");
    std::vector<int> lo, hi;
    lo.push_back(i0);
    hi.push_back(i1);
    int step_lo = 1, step_hi = 1;
    while (lo.back() < hi.back()) {
        if (lo.back() - i0 <= i1 - hi.back()) {
            lo.push_back(std::min(lo.back() + step_lo, hi.back()));
            if (!fine_at_lo || lo.size() > 2) step_lo = std::max(step_lo + 1, (3 * step_lo) / 2);
        } else {
            hi.push_back(std::max(hi.back() - step_hi, lo.back()));
            if (!fine_at_hi || hi.size() > 2) step_hi = std::max(step_hi + 1, (3 * step_hi) / 2);
        }
    }
    std::vector<int> out(lo.begin(), lo.end());
    for (auto it = hi.rbegin(); it != hi.rend(); ++it)
        if (*it > out.back()) out.push_back(*it);
    return out;
}

double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, tol);
}

}  // namespace fracrough
