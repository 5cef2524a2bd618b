#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracrough/common.hpp"

namespace fracrough {

// Uniformly sampled vector-valued path on [t0, T]: n cells, n+1 nodes.
struct GridPath {
    double t0 = 0.0;
    double T = 1.0;
    int n = 1;
    int dim = 1;
    std::vector<double> v;  // (n+1)*dim, node-major

    GridPath() = default;
    GridPath(double t0_, double T_, int n_, int dim_)
        : t0(t0_), T(T_), n(n_), dim(dim_), v(size_t(n_ + 1) * dim_, 0.0) {
        require_arg(n >= 1 && T > t0 && dim >= 1, "GridPath: invalid shape");
    }

    double dt() const { return (T - t0) / n; }
    double node(int i) const { return t0 + (T - t0) * double(i) / n; }
    double* at(int i) { return v.data() + size_t(i) * dim; }
    const double* at(int i) const { return v.data() + size_t(i) * dim; }
    double& operator()(int i, int k) { return v[size_t(i) * dim + k]; }
    double operator()(int i, int k) const { return v[size_t(i) * dim + k]; }

    // Linear interpolation at time t (clamped to [t0, T]).
    void value_at(double t, double* out) const;
    double scalar_at(double t) const;

    // Scalar component view.
    GridPath component(int k) const;

    void check_finite() const;

    // Sample t -> f(t).
    static GridPath sample(double t0, double T, int n, const std::function<double(double)>& f);
};

struct Window {
    int lo = 0;
    int hi = 1;
    void validate(const GridPath& p) const {
        require(0 <= lo && lo < hi && hi <= p.n, "Window: invalid for this grid");
    }
    int cells() const { return hi - lo; }
};

inline Window full_window(const GridPath& p) { return Window{0, p.n}; }

double euclid_norm(const double* x, int dim);
double euclid_dist(const double* x, const double* y, int dim);

// sup over grid pairs lo <= i < j <= hi of |x_j - x_i| / (t_j - t_i)^beta.
// Exhaustive pair scan for windows up to 2048 cells; dyadic-pair restriction
// (j - i a power of two, plus the full-window pair) above that.
double holder_norm(const GridPath& p, double beta, Window w);
inline double holder_norm(const GridPath& p, double beta) { return holder_norm(p, beta, full_window(p)); }

// sup over grid-node partitions of (sum |dx|^p)^{1/p}, by dynamic programming.
double p_variation(const GridPath& p, double pexp);

double sup_norm(const GridPath& p, Window w);

// Linear interpolation onto a grid with factor-times more cells.
GridPath resample(const GridPath& p, int factor);

// CSV "t,x1,...,xm" I/O; reader validates uniform spacing to 1e-9 relative.
void write_path_csv(const GridPath& p, const std::string& filename);
GridPath read_path_csv(const std::string& filename);

}  // namespace fracrough
