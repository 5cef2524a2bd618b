#include "fracrough/special.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "fracrough/quadrature.hpp"

namespace fracrough {

namespace {

// 16-point Gauss-Legendre on [0,1].
const double kGLx[16] = {
    0.005299532504175031, 0.0277124884633837,  0.06718439880608412, 0.1222977958224985,
    0.1910618777986781,   0.2709916111713863,  0.3591982246103705,  0.4524937450811813,
    0.5475062549188187,   0.6408017753896295,  0.7290083888286137,  0.8089381222013219,
    0.8777022041775015,   0.9328156011939159,  0.9722875115366163,  0.994700467495825};
const double kGLw[16] = {
    0.01357622970587705, 0.03112676196932395, 0.04757925584124639, 0.06231448562776694,
    0.07479799440828837, 0.08457825969750127, 0.09130170752246179, 0.0947253052275343,
    0.0947253052275343,  0.09130170752246179, 0.08457825969750127, 0.07479799440828837,
    0.06231448562776694, 0.04757925584124639, 0.03112676196932395, 0.01357622970587705};

template <typename F>
double panel_gl(double a, double b, F&& f) {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += kGLw[i] * f(a + (b - a) * kGLx[i]);
    return (b - a) * s;
}

// int_0^1 (1-q)^{2a-2} q^{sigma} g(q) dq, sigma > -1, uniformly in the knee
// location 1/z: substituted panels at both endpoints, geometric panels across
// the knee, plain Gauss in between.
template <typename G>
double beta_weighted_sigma(double alpha, double sigma, double z, G&& g) {
    const double qs = std::min(0.25, 1.0 / std::max(z, 4.0));
    double total = 0.0;
    // [0, qs]: q = qs * v^{1/(1+sigma)} flattens the q^{sigma} weight.
    {
        const double s = 1.0 / (1.0 + sigma);
        total += std::pow(qs, 1.0 + sigma) * s *
                 panel_gl(0.0, 1.0, [&](double v) {
                     const double q = qs * std::pow(v, s);
                     return std::pow(1.0 - q, 2.0 * alpha - 2.0) * g(q);
                 });
    }
    // geometric panels [qs, 2qs, ...] up to 1/2
    double c = qs;
    while (c < 0.5) {
        const double d = std::min(0.5, 2.0 * c);
        total += panel_gl(c, d, [&](double q) {
            return std::pow(1.0 - q, 2.0 * alpha - 2.0) * std::pow(q, sigma) * g(q);
        });
        c = d;
    }
    // [1/2, 1]: 1-q = (1/2) w^{1/(2alpha-1)} flattens the right weight.
    {
        const double r = 1.0 / (2.0 * alpha - 1.0);
        total += std::pow(0.5, 2.0 * alpha - 1.0) * r *
                 panel_gl(0.0, 1.0, [&](double w) {
                     const double q = 1.0 - 0.5 * std::pow(w, r);
                     return std::pow(q, sigma) * g(q);
                 });
    }
    return total;
}

template <typename G>
double beta_weighted(double alpha, double z, G&& g) {
    return beta_weighted_sigma(alpha, -alpha, z, g);
}

}  // namespace

PhiFamily::PhiFamily(double alpha) : alpha_(alpha) {
    require(alpha > 0.5 && alpha < 1.0, "PhiFamily: alpha must lie in (1/2, 1)");
    C_ = 1.0 / (alpha * gamma_fn(alpha) * gamma_fn(2.0 * alpha - 1.0));
    phi_tab_.resize(npts_);
    dphi_tab_.resize(npts_);
    psi2_tab_.resize(npts_);
    for (int i = 0; i < npts_; ++i) {
        const double lz = log_lo_ + (log_hi_ - log_lo_) * i / (npts_ - 1);
        const double z = std::exp(lz);
        phi_tab_[i] = phi_direct(z);
        dphi_tab_[i] = phi_prime_direct(z);
        psi2_tab_[i] = psi2_direct(z);
    }
}

double PhiFamily::phi_direct(double z) const {
    if (z == 0.0) return phi_at_zero();
    return C_ * beta_weighted(alpha_, z, [&](double q) { return 1.0 / (1.0 + q * z); });
}

double PhiFamily::phi_prime_direct(double z) const {
    return -C_ * beta_weighted(alpha_, z, [&](double q) { return q / sqr(1.0 + q * z); });
}

double PhiFamily::psi2_direct(double z) const {
    const double a1 = sqr(alpha_ - 1.0);
    return C_ * beta_weighted(alpha_, z, [&](double q) {
        const double w = 1.0 + q * z;
        return (a1 * w * w + q * z * (1.0 + (2.0 - q) * z)) / (w * w * w);
    });
}

double PhiFamily::phi_at_zero() const { return C_ * beta_fn(2.0 * alpha_ - 1.0, 1.0 - alpha_); }

double PhiFamily::table_lookup(const std::vector<double>& tab, double z) const {
    const double lz = std::log(z);
    const double t = (lz - log_lo_) / (log_hi_ - log_lo_) * (npts_ - 1);
    int i = int(t);
    i = std::max(1, std::min(npts_ - 3, i));
    const double s = t - i;
    // 4-point Lagrange in log z.
    const double ym1 = tab[i - 1], y0 = tab[i], y1 = tab[i + 1], y2 = tab[i + 2];
    return ym1 * (-s * (s - 1.0) * (s - 2.0) / 6.0) + y0 * ((s * s - 1.0) * (s - 2.0) / 2.0) +
           y1 * (-s * (s + 1.0) * (s - 2.0) / 2.0) + y2 * (s * (s * s - 1.0) / 6.0);
}

double PhiFamily::phi(double z) const {
    if (z <= 0.0) return phi_at_zero();
    const double lz = std::log(z);
    if (lz < log_lo_ || lz > log_hi_) return phi_direct(z);
    return table_lookup(phi_tab_, z);
}

double PhiFamily::phi_prime(double z) const {
    if (z <= 0.0) z = 0.0;
    const double lz = (z > 0.0) ? std::log(z) : -1e30;
    if (lz < log_lo_ || lz > log_hi_) return phi_prime_direct(z);
    return table_lookup(dphi_tab_, z);
}

double PhiFamily::psi(double z) const {
    const double psi1 = -(alpha_ - 1.0) * (alpha_ - 2.0) * z * phi(z);
    double psi2;
    if (z <= 0.0) {
        psi2 = sqr(alpha_ - 1.0) * phi_at_zero();
    } else {
        const double lz = std::log(z);
        psi2 = (lz < log_lo_ || lz > log_hi_) ? psi2_direct(z) : table_lookup(psi2_tab_, z);
    }
    return psi1 + psi2;
}

const PhiFamily& PhiFamily::get(double alpha) {
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<PhiFamily>> registry;
    std::lock_guard<std::mutex> lock(mu);
    const long long key = llround(alpha * 1e12);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<PhiFamily>(alpha)).first;
    return *it->second;
}

}  // namespace fracrough
