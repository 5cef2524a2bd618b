#include <cmath>
#include <cstdio>
#include <random>

#include "doctest.h"
#include "fracrough/grid_path.hpp"

using namespace fracrough;

namespace {
const double kPi = 3.14159265358979323846;

GridPath rough_fixture(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GridPath p(0.0, 1.0, n, 1);
    // Weierstrass-type sum, deterministic phases: beta-Hoelder with beta=0.4.
    std::vector<double> phase(12);
    for (auto& ph : phase) ph = u(rng) * kPi;
    for (int i = 0; i <= n; ++i) {
        double t = p.node(i), s = 0.0;
        for (int k = 0; k < 12; ++k) s += std::pow(2.0, -0.4 * k) * std::cos(std::pow(2.0, k) * 2 * kPi * t + phase[k]);
        p(i, 0) = s;
    }
    return p;
}
}  // namespace

TEST_CASE("holder_norm on identity, constant and t^2") {
    auto id = GridPath::sample(0, 1, 100, [](double t) { return t; });
    CHECK(holder_norm(id, 0.4) == doctest::Approx(1.0).epsilon(1e-12));

    auto c = GridPath::sample(0, 1, 50, [](double) { return 3.25; });
    CHECK(holder_norm(c, 0.4) == doctest::Approx(0.0));

    auto sq = GridPath::sample(0, 1, 100, [](double t) { return t * t; });
    // brute force over all grid pairs; the sup of (t+s)(t-s)^{0.6} sits at
    // s = 1/4, t = 1 (both grid points at N=100), value 1.25 * 0.75^{0.6}
    double brute = 0.0;
    for (int i = 0; i < 100; ++i)
        for (int j = i + 1; j <= 100; ++j)
            brute = std::max(brute, std::abs(sq(j, 0) - sq(i, 0)) /
                                        std::pow((j - i) / 100.0, 0.4));
    CHECK(brute == doctest::Approx(1.25 * std::pow(0.75, 0.6)).epsilon(1e-12));
    CHECK(holder_norm(sq, 0.4) == doctest::Approx(brute).epsilon(1e-13));
}

TEST_CASE("holder_norm scaling and window monotonicity") {
    auto p = rough_fixture(128, 7);
    GridPath q = p;
    for (auto& x : q.v) x *= -2.5;
    CHECK(holder_norm(q, 0.4) == doctest::Approx(2.5 * holder_norm(p, 0.4)).epsilon(1e-13));
    CHECK(holder_norm(p, 0.4, Window{8, 64}) <= holder_norm(p, 0.4, Window{0, 128}) + 1e-15);
    CHECK_THROWS_AS(holder_norm(p, 0.4, Window{10, 10}), std::domain_error);
}

TEST_CASE("resample keeps affine paths and original-node holder norms") {
    auto id = GridPath::sample(0, 1, 16, [](double t) { return 2.0 * t - 0.5; });
    auto r = resample(id, 4);
    REQUIRE(r.n == 64);
    for (int i = 0; i <= r.n; ++i)
        CHECK(r(i, 0) == doctest::Approx(2.0 * r.node(i) - 0.5).epsilon(1e-14));
    CHECK(holder_norm(resample(id, 2), 0.4) == doctest::Approx(holder_norm(id, 0.4)).epsilon(1e-13));

    auto p = rough_fixture(64, 3);
    CHECK(holder_norm(resample(p, 2), 0.4) >= holder_norm(p, 0.4) - 1e-13);

    auto two = GridPath::sample(0, 1, 1, [](double t) { return t; });
    auto mid = resample(two, 2);
    CHECK(mid(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("p_variation: monotone, constant, zigzag") {
    auto id = GridPath::sample(0, 1, 40, [](double t) { return t; });
    CHECK(p_variation(id, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    auto c = GridPath::sample(0, 1, 8, [](double) { return 1.0; });
    CHECK(p_variation(c, 2.0) == doctest::Approx(0.0));

    GridPath zig(0, 1, 4, 1);
    double vals[5] = {0, 1, 0, 1, 0};
    for (int i = 0; i <= 4; ++i) zig(i, 0) = vals[i];
    CHECK(p_variation(zig, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(p_variation(zig, 0.5), std::domain_error);
}

TEST_CASE("Var_{1/beta} <= holder_norm on unit windows") {
    for (unsigned seed : {1u, 2u, 5u}) {
        auto p = rough_fixture(100, seed);
        const double beta = 0.4;
        CHECK(p_variation(p, 1.0 / beta) <= holder_norm(p, beta) * (1.0 + 1e-12));
    }
}

TEST_CASE("sup_norm") {
    auto s = GridPath::sample(0, 1, 16, [](double t) { return std::sin(2 * kPi * t); });
    CHECK(sup_norm(s, full_window(s)) == doctest::Approx(1.0).epsilon(1e-12));
    auto sh = GridPath::sample(0, 1, 10, [](double t) { return t - 0.5; });
    CHECK(sup_norm(sh, full_window(sh)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("csv roundtrip and spacing validation") {
    auto p = rough_fixture(32, 11);
    const char* fn = "test_path_tmp.csv";
    write_path_csv(p, fn);
    auto q = read_path_csv(fn);
    REQUIRE(q.n == p.n);
    for (int i = 0; i <= p.n; ++i) CHECK(q(i, 0) == doctest::Approx(p(i, 0)).epsilon(1e-15));

    std::FILE* f = std::fopen(fn, "w");
    std::fprintf(f, "t,x1\n0,0\n0.1,1\n0.35,2\n");
    std::fclose(f);
    CHECK_THROWS_AS(read_path_csv(fn), std::domain_error);
    std::remove(fn);
}
