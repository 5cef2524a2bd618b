#pragma once

#include <string>
#include <vector>

#include "fracrough/grid_path.hpp"

namespace fracrough {

// Multiplicative functional (x, y, x(x)y): two paths on a shared grid plus the
// level-2 area on all grid pairs i <= j, stored as an upper-triangular table.
//
// Between grid nodes the functional is extended by a fixed data model: paths
// piecewise linear, same-cell areas = piecewise-linear part plus the cell's
// excess area distributed linearly in length, cross-cell pairs assembled with
// the Chen relation. The extension is Chen-exact at every real pair and
// matches the table at grid pairs; all singular quadratures evaluate it.
struct MultFunc {
    GridPath x;  // dim m
    GridPath y;  // dim d
    double beta = 0.4;
    std::vector<double> area;  // pair-major, m*d entries per pair (i <= j)

    int m() const { return x.dim; }
    int d() const { return y.dim; }
    int n() const { return x.n; }

    size_t pair_index(int i, int j) const {
        return (size_t(i) * (2 * size_t(x.n) + 3 - i)) / 2 + (j - i);
    }
    double& a(int i, int j, int p, int q) {
        return area[pair_index(i, j) * m() * d() + size_t(p) * d() + q];
    }
    double a(int i, int j, int p, int q) const {
        return area[pair_index(i, j) * m() * d() + size_t(p) * d() + q];
    }

    // Model evaluation at real times u <= v (O(cells between u and v)).
    double area_model(double u, double v, int p, int q) const;

    // Excess of a cell's stored area over its piecewise-linear value.
    double cell_excess(int k, int p, int q) const;

    void allocate_area() { area.assign((size_t(n()) + 1) * (n() + 2) / 2 * m() * d(), 0.0); }

    // Invariant checks for loaded functionals: diagonal zero, Chen defect of
    // every sampled triple below tol * (t-s)^{2 beta}.
    void validate(double tol = 1e-8, uint64_t sample_seed = 42) const;
};

// Level-2 area of piecewise-linear (x, y): cell areas (1/2) dx (x) dy, pairs
// assembled through the Chen relation. Chen defect is exactly zero up to
// rounding.
MultFunc area_from_lipschitz(const GridPath& x, const GridPath& y, double beta = 0.4);

// area(s,u) + area(u,t) + (x_u - x_s)(x)(y_t - y_u) - area(s,t), Frobenius entries.
std::vector<double> chen_defect(const MultFunc& mf, int s, int u, int t);
double chen_defect_norm(const MultFunc& mf, int s, int u, int t);

// sup over grid pairs of |area(i,j)|_F / (t_j - t_i)^{2 beta}.
double area_holder_norm(const MultFunc& mf, Window w);
inline double area_holder_norm(const MultFunc& mf) { return area_holder_norm(mf, full_window(mf.x)); }

// Driver perturbation y -> y + delta*s for a piecewise-linear disturbance s:
// areas combined bilinearly (y(x)s and s(x)y built with the same cell model).
MultFunc perturbed_driver(const MultFunc& y_mf, const GridPath& s, double delta);

// CSV `i,j,a11,...,amd` for i <= j; loader enforces the invariants.
void write_area_csv(const MultFunc& mf, const std::string& filename);
MultFunc read_area_csv(const GridPath& x, const GridPath& y, double beta, const std::string& filename);

}  // namespace fracrough
