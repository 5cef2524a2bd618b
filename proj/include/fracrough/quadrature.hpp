#pragma once

#include <functional>
#include <vector>

#include "fracrough/common.hpp"

namespace fracrough {

// Weight (u-p)^g1 * (q-u)^g2 on subintervals of [p,q]. Exponents are
// "inactive" when exactly 0. Both must be > -1 where active.
struct PowerWeight {
    double p = 0.0, g1 = 0.0;
    double q = 1.0, g2 = 0.0;
};

// Moments mu_k = int_c^d w(u) * (u-c)^k du, k = 0,1,2.
void weight_moments(const PowerWeight& w, double c, double d, double mu[3]);

// int_c^d w(u) * g(u) du with g quadratic through (c,gc), (mid,gm), (d,gd).
double integrate_quadratic(const PowerWeight& w, double c, double d, double gc, double gm, double gd);

// Same with g linear through the endpoints.
double integrate_linear(const PowerWeight& w, double c, double d, double gc, double gd);

// int_c^q (q-u)^g * N(u) du where N(q) = 0 and N is quadratic through
// (c, Nc) and the midpoint (Nm). Valid for g > -2.
double integrate_vanishing_right(double q, double g, double c, double Nc, double Nm);

// int_p^d (u-p)^g * N(u) du where N(p) = 0, N quadratic through (mid, Nm), (d, Nd).
double integrate_vanishing_left(double p, double g, double d, double Nm, double Nd);

// Power-graded mesh on [a,b], refined toward `a` when grade_at_a, else toward b.
// Returns m+1 strictly increasing breakpoints.
std::vector<double> graded_mesh(double a, double b, int m, double grading, bool grade_at_a);

// Mesh refined toward both endpoints (split at the midpoint).
std::vector<double> graded_mesh_two_sided(double a, double b, int m_half, double grading);

// Subset of grid cell indices in [i0, i1]: every cell near the flagged ends,
// geometrically coarsened in the middle. Returns increasing indices starting
// at i0 and ending at i1.
std::vector<int> coarsened_index_mesh(int i0, int i1, bool fine_at_lo, bool fine_at_hi);

// Reference quadrature (boost tanh_sinh) for analytic integrands with
// integrable endpoint singularities. Test/reference paths only.
double tanh_sinh_integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-10);

}  // namespace fracrough
