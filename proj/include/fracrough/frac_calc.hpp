#pragma once

#include "fracrough/grid_path.hpp"

namespace fracrough {

// Quadrature strategy for the power-law kernels. Product integration replaces
// the non-singular factor by a low-order interpolant per cell and integrates
// the power weight in closed form; graded meshes refine toward singular
// endpoints of the analytic (non-grid) integrals.
struct SingularQuadRule {
    int cells_per_interval = 8;
    double grading_exponent = 3.0;
    void validate() const {
        require(cells_per_interval >= 1 && grading_exponent >= 1.0,
                "SingularQuadRule: invalid parameters");
    }
};

// Pointwise evaluations on piecewise-linear data. `a`/`b` are the base
// points; `t` an arbitrary point of the window.
double frac_integral_left_at(const GridPath& f, double alpha, double a, double t);
double frac_integral_right_at(const GridPath& f, double alpha, double b, double t);
// Marchaud-form Weyl derivatives, phase-free. of_b_minus replaces f by
// f - f(b) in the right-sided boundary term.
double weyl_left_at(const GridPath& f, double alpha, double a, double t);
double weyl_right_at(const GridPath& f, double alpha, double b, double t, bool of_b_minus = false);

// Node-wise operators over a window (values at the window's grid nodes).
GridPath frac_integral_left(const GridPath& f, double alpha, Window w);
GridPath frac_integral_right(const GridPath& f, double alpha, Window w);
GridPath weyl_deriv_left(const GridPath& f, double alpha, Window w);
GridPath weyl_deriv_right(const GridPath& f, double alpha, Window w);

// Riemann-Stieltjes integral of f dg through fractional derivatives,
// real convention:  -int_a^b D^alpha_{a+} f (t) * D^{1-alpha}_{b-} g_{b-}(t) dt.
// Emits a warning through the returned struct when the grid Hoelder heuristics
// violate lambda > alpha, mu > 1 - alpha.
struct YoungResult {
    double value = 0.0;
    bool admissibility_warning = false;
};
YoungResult young_integral(const GridPath& f, const GridPath& g, double alpha, Window w);

}  // namespace fracrough
