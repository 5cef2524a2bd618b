#include <cmath>

#include "doctest.h"
#include "fracrough/quadrature.hpp"
#include "fracrough/special.hpp"

using namespace fracrough;

TEST_CASE("phi at zero matches the Beta closed form") {
    for (double a : {0.6, 0.65, 0.7, 0.8}) {
        const PhiFamily& F = PhiFamily::get(a);
        const double closed = F.C() * beta_fn(2 * a - 1, 1 - a);
        CHECK(F.phi_direct(1e-13) == doctest::Approx(closed).epsilon(1e-8));
        CHECK(F.phi(0.0) == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("phi decreasing, phi' negative, decay bound") {
    const PhiFamily& F = PhiFamily::get(0.7);
    double prev = F.phi(1e-3);
    for (int i = 1; i < 60; ++i) {
        const double z = 1e-3 * std::pow(1e6 / 1e-3, i / 59.0);
        const double cur = F.phi(z);
        CHECK(cur < prev);
        CHECK(F.phi_prime(z) < 0.0);
        prev = cur;
    }
    // phi(z) * z^{beta'} bounded for beta' < 1 - alpha
    const double bp = (1.0 - 0.7) / 2.0;
    double sup = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double z = std::pow(10.0, 6.0 * i / 39.0);
        sup = std::max(sup, F.phi(z) * std::pow(z, bp));
    }
    CHECK(std::isfinite(sup));
    CHECK(sup < 10.0 * F.phi(0.0));
}

TEST_CASE("phi table agrees with direct quadrature, in and out of range") {
    const PhiFamily& F = PhiFamily::get(0.65);
    for (double z : {1e-4, 3e-3, 0.2, 1.0, 17.5, 4e3, 2e6}) {
        CHECK(F.phi(z) == doctest::Approx(F.phi_direct(z)).epsilon(1e-7));
        CHECK(F.phi_prime(z) == doctest::Approx(F.phi_prime_direct(z)).epsilon(1e-6));
    }
}

TEST_CASE("phi' central-difference check") {
    const PhiFamily& F = PhiFamily::get(0.7);
    const double z = 1.0, h = 1e-4;
    const double fd = (F.phi_direct(z + h) - F.phi_direct(z - h)) / (2 * h);
    CHECK(F.phi_prime_direct(z) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("psi profiles: finite, with z^alpha growth envelope") {
    const PhiFamily& F = PhiFamily::get(0.7);
    for (double z : {0.0, 0.5, 3.0, 1e2, 1e5}) {
        CHECK(std::isfinite(F.psi(z)));
    }
    // both psi parts grow like z^alpha (up to logs); check the envelope holds
    double sup = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double z = std::pow(10.0, 6.0 * i / 29.0);
        sup = std::max(sup, std::abs(F.psi(z)) * std::pow(z, -0.7) / std::log(4.0 + z));
    }
    CHECK(sup < 1e2 * F.phi(0.0));
}

// The hypergeometric reduction the G-kernel rests on:
// int_xi^eta (eta-r)^{a-1} (r-th)^{-a-1} dr = (1/a) (eta-xi)^a (xi-th)^{-a} (eta-th)^{-1}.
TEST_CASE("Gradshteyn-Ryzhik 3.196 identity numerically") {
    const double a = 0.7, th = 0.1, xi = 0.4, eta = 1.3;
    auto f = [&](double r) { return std::pow(eta - r, a - 1.0) * std::pow(r - th, -a - 1.0); };
    const double numeric = tanh_sinh_integrate(f, xi, eta, 1e-12);
    const double closed =
        std::pow(eta - xi, a) * std::pow(xi - th, -a) / (a * (eta - th));
    CHECK(numeric == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("power weight moments match reference quadrature") {
    PowerWeight w{0.2, -0.6, 1.5, -0.3};
    double mu[3];
    weight_moments(w, 0.2, 0.9, mu);
    for (int k = 0; k < 3; ++k) {
        // shifted frame: singular endpoint exactly representable at 0
        auto f = [&](double s) { return std::pow(s, w.g1 + k) * std::pow(1.3 - s, w.g2); };
        CHECK(mu[k] == doctest::Approx(tanh_sinh_integrate(f, 0.0, 0.7, 1e-12)).epsilon(1e-9));
    }
    // vanishing-numerator closed forms
    auto g = [&](double u) { return std::pow(1.0 - u, -1.3) * (1.0 - u) * (2.0 - u); };
    const double direct = tanh_sinh_integrate(g, 0.4, 1.0, 1e-12);
    auto N = [](double u) { return (1.0 - u) * (2.0 - u); };
    CHECK(integrate_vanishing_right(1.0, -1.3, 0.4, N(0.4), N(0.7)) ==
          doctest::Approx(direct).epsilon(1e-9));
}
