#include "fracrough/frac_calc.hpp"

#include <algorithm>
#include <cmath>

#include "fracrough/quadrature.hpp"

namespace fracrough {

namespace {

struct Cell {
    double c, m, d;  // endpoints and midpoint
};

// Decompose [a, t] into grid-aligned cells (first/last may be partial).
template <typename F>
void for_cells(const GridPath& p, double a, double t, F&& body) {
    const double h = p.dt();
    const double eps = 1e-12 * (p.T - p.t0);
    if (t - a <= eps) return;
    int k = int(std::floor((a - p.t0) / h + 1e-9));
    k = std::clamp(k, 0, p.n - 1);
    double c = a;
    while (c < t - eps) {
        double d = std::min(t, p.t0 + h * (k + 1));
        if (d - c > eps) body(Cell{c, 0.5 * (c + d), d});
        c = d;
        ++k;
    }
}

double lin_at(const GridPath& f, double t) { return f.scalar_at(t); }

}  // namespace

double frac_integral_left_at(const GridPath& f, double alpha, double a, double t) {
    require(alpha > 0.0 && alpha < 1.0, "frac order outside (0,1)");
    if (t <= a) return 0.0;
    double acc = 0.0;
    for_cells(f, a, t, [&](const Cell& cell) {
        PowerWeight pw{0.0, 0.0, t, alpha - 1.0};
        acc += integrate_linear(pw, cell.c, cell.d, lin_at(f, cell.c), lin_at(f, cell.d));
    });
    return acc / gamma_fn(alpha);
}

double frac_integral_right_at(const GridPath& f, double alpha, double b, double t) {
    require(alpha > 0.0 && alpha < 1.0, "frac order outside (0,1)");
    if (t >= b) return 0.0;
    double acc = 0.0;
    for_cells(f, t, b, [&](const Cell& cell) {
        PowerWeight pw{t, alpha - 1.0, 0.0, 0.0};
        acc += integrate_linear(pw, cell.c, cell.d, lin_at(f, cell.c), lin_at(f, cell.d));
    });
    return acc / gamma_fn(alpha);
}

double weyl_left_at(const GridPath& f, double alpha, double a, double t) {
    require(alpha > 0.0 && alpha < 1.0, "frac order outside (0,1)");
    require(t > a, "weyl_left_at: boundary term singular at t = a");
    const double ft = lin_at(f, t);
    double acc = ft / std::pow(t - a, alpha);
    double integral = 0.0;
    const double eps = 1e-12 * (f.T - f.t0);
    for_cells(f, a, t, [&](const Cell& cell) {
        const double Nc = ft - lin_at(f, cell.c);
        const double Nm = ft - lin_at(f, cell.m);
        if (cell.d >= t - eps) {
            integral += integrate_vanishing_right(t, -alpha - 1.0, cell.c, Nc, Nm);
        } else {
            PowerWeight pw{0.0, 0.0, t, -alpha - 1.0};
            integral += integrate_quadratic(pw, cell.c, cell.d, Nc, Nm, ft - lin_at(f, cell.d));
        }
    });
    acc += alpha * integral;
    return acc / gamma_fn(1.0 - alpha);
}

double weyl_right_at(const GridPath& f, double alpha, double b, double t, bool of_b_minus) {
    require(alpha > 0.0 && alpha < 1.0, "frac order outside (0,1)");
    require(t < b, "weyl_right_at: boundary term singular at t = b");
    const double ft = lin_at(f, t);
    const double boundary_val = of_b_minus ? ft - lin_at(f, b) : ft;
    double acc = boundary_val / std::pow(b - t, alpha);
    double integral = 0.0;
    const double eps = 1e-12 * (f.T - f.t0);
    for_cells(f, t, b, [&](const Cell& cell) {
        const double Nd = ft - lin_at(f, cell.d);
        const double Nm = ft - lin_at(f, cell.m);
        if (cell.c <= t + eps) {
            integral += integrate_vanishing_left(t, -alpha - 1.0, cell.d, Nm, Nd);
        } else {
            PowerWeight pw{t, -alpha - 1.0, 0.0, 0.0};
            integral += integrate_quadratic(pw, cell.c, cell.d, ft - lin_at(f, cell.c), Nm, Nd);
        }
    });
    acc += alpha * integral;
    return acc / gamma_fn(1.0 - alpha);
}

namespace {

GridPath window_grid(const GridPath& f, Window w) {
    return GridPath(f.node(w.lo), f.node(w.hi), w.cells(), 1);
}

}  // namespace

GridPath frac_integral_left(const GridPath& f, double alpha, Window w) {
    w.validate(f);
    require_arg(f.dim == 1, "frac operators take scalar paths");
    GridPath out = window_grid(f, w);
    const double a = f.node(w.lo);
    for (int i = 0; i <= out.n; ++i) out(i, 0) = frac_integral_left_at(f, alpha, a, out.node(i));
    return out;
}

GridPath frac_integral_right(const GridPath& f, double alpha, Window w) {
    w.validate(f);
    require_arg(f.dim == 1, "frac operators take scalar paths");
    GridPath out = window_grid(f, w);
    const double b = f.node(w.hi);
    for (int i = 0; i <= out.n; ++i) out(i, 0) = frac_integral_right_at(f, alpha, b, out.node(i));
    return out;
}

GridPath weyl_deriv_left(const GridPath& f, double alpha, Window w) {
    w.validate(f);
    require_arg(f.dim == 1, "frac operators take scalar paths");
    GridPath out = window_grid(f, w);
    const double a = f.node(w.lo);
    out(0, 0) = 0.0;  // singular at the base node; pointwise API throws there
    for (int i = 1; i <= out.n; ++i) out(i, 0) = weyl_left_at(f, alpha, a, out.node(i));
    return out;
}

GridPath weyl_deriv_right(const GridPath& f, double alpha, Window w) {
    w.validate(f);
    require_arg(f.dim == 1, "frac operators take scalar paths");
    GridPath out = window_grid(f, w);
    const double b = f.node(w.hi);
    out(out.n, 0) = 0.0;
    for (int i = 0; i < out.n; ++i) out(i, 0) = weyl_right_at(f, alpha, b, out.node(i));
    return out;
}

namespace {

// Crude grid exponent estimate from max increments at two gap scales.
double estimate_holder_exponent(const GridPath& f, Window w) {
    const int g2 = std::max(2, w.cells() / 16);
    double m1 = 0.0, m2 = 0.0;
    for (int i = w.lo; i < w.hi; ++i) m1 = std::max(m1, std::abs(f(i + 1, 0) - f(i, 0)));
    for (int i = w.lo; i + g2 <= w.hi; ++i) m2 = std::max(m2, std::abs(f(i + g2, 0) - f(i, 0)));
    if (m1 <= 0.0 || m2 <= 0.0) return 1.0;
    return std::clamp(std::log(m2 / m1) / std::log(double(g2)), 0.0, 1.0);
}

// Difference-integral part of D^alpha_{a+} f at t (boundary term excluded).
double weyl_left_tail(const GridPath& f, double alpha, double a, double t) {
    if (t <= a) return 0.0;
    const double ft = lin_at(f, t);
    double integral = 0.0;
    const double eps = 1e-12 * (f.T - f.t0);
    for_cells(f, a, t, [&](const Cell& cell) {
        const double Nc = ft - lin_at(f, cell.c);
        const double Nm = ft - lin_at(f, cell.m);
        if (cell.d >= t - eps) {
            integral += integrate_vanishing_right(t, -alpha - 1.0, cell.c, Nc, Nm);
        } else {
            PowerWeight pw{0.0, 0.0, t, -alpha - 1.0};
            integral += integrate_quadratic(pw, cell.c, cell.d, Nc, Nm, ft - lin_at(f, cell.d));
        }
    });
    return alpha * integral / gamma_fn(1.0 - alpha);
}

}  // namespace

YoungResult young_integral(const GridPath& f, const GridPath& g, double alpha, Window w) {
    w.validate(f);
    w.validate(g);
    require_arg(f.dim == 1 && g.dim == 1, "young_integral takes scalar paths");
    require(alpha > 0.0 && alpha < 1.0, "frac order outside (0,1)");
    f.check_finite();
    g.check_finite();

    YoungResult res;
    const double lam = estimate_holder_exponent(f, w);
    const double mu = estimate_holder_exponent(g, w);
    if (lam + mu <= 1.0 || lam <= alpha || mu <= 1.0 - alpha) res.admissibility_warning = true;

    const double a = f.node(w.lo), b = f.node(w.hi);
    const double rg = rgamma(1.0 - alpha);
    auto Dg = [&](double t) { return weyl_right_at(g, 1.0 - alpha, b, t, true); };
    auto R = [&](double t) { return weyl_left_tail(f, alpha, a, t); };

    double acc = 0.0;
    for_cells(f, a, b, [&](const Cell& cell) {
        const double eps = 1e-12 * (f.T - f.t0);
        const double dg_c = Dg(cell.c);
        const double dg_m = Dg(cell.m);
        const double dg_d = (cell.d >= b - eps) ? 0.0 : Dg(cell.d);
        // boundary-term part, explicit (t-a)^{-alpha} weight
        PowerWeight wgt{a, -alpha, 0.0, 0.0};
        acc += integrate_quadratic(wgt, cell.c, cell.d, rg * lin_at(f, cell.c) * dg_c,
                                   rg * lin_at(f, cell.m) * dg_m, rg * lin_at(f, cell.d) * dg_d);
        // difference-integral part, bounded integrand
        PowerWeight plain{};
        acc += integrate_quadratic(plain, cell.c, cell.d, R(cell.c) * dg_c, R(cell.m) * dg_m,
                                   R(cell.d) * dg_d);
    });
    res.value = -acc;
    return res;
}

}  // namespace fracrough
