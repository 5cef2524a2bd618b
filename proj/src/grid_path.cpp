#include "fracrough/grid_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fracrough {

void GridPath::value_at(double t, double* out) const {
    const double s = std::clamp((t - t0) / dt(), 0.0, double(n));
    int i = std::min(int(s), n - 1);
    const double w = s - i;
    for (int k = 0; k < dim; ++k) out[k] = (1.0 - w) * (*this)(i, k) + w * (*this)(i + 1, k);
}

double GridPath::scalar_at(double t) const {
    require_arg(dim == 1, "scalar_at: path is not scalar");
    double x;
    value_at(t, &x);
    return x;
}

GridPath GridPath::component(int k) const {
    require_arg(k >= 0 && k < dim, "component: index out of range");
    GridPath out(t0, T, n, 1);
    for (int i = 0; i <= n; ++i) out(i, 0) = (*this)(i, k);
    return out;
}

void GridPath::check_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) throw std::domain_error("GridPath: non-finite value");
}

GridPath GridPath::sample(double t0, double T, int n, const std::function<double(double)>& f) {
    GridPath p(t0, T, n, 1);
    for (int i = 0; i <= n; ++i) p(i, 0) = f(p.node(i));
    return p;
}

double euclid_norm(const double* x, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += x[k] * x[k];
    return std::sqrt(s);
}

double euclid_dist(const double* x, const double* y, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += sqr(x[k] - y[k]);
    return std::sqrt(s);
}

double holder_norm(const GridPath& p, double beta, Window w) {
    w.validate(p);
    require(beta > 0.0 && beta < 1.0, "holder_norm: beta outside (0,1)");
    const double h = p.dt();
    double best = 0.0;
    if (w.cells() <= 2048) {
        for (int i = w.lo; i < w.hi; ++i)
            for (int j = i + 1; j <= w.hi; ++j) {
                const double r = euclid_dist(p.at(j), p.at(i), p.dim) / std::pow((j - i) * h, beta);
                best = std::max(best, r);
            }
        return best;
    }
    // Large windows: dyadic gaps only (documented approximation).
    for (int gap = 1; gap <= w.cells(); gap *= 2) {
        const double denom = std::pow(gap * h, beta);
        for (int i = w.lo; i + gap <= w.hi; ++i)
            best = std::max(best, euclid_dist(p.at(i + gap), p.at(i), p.dim) / denom);
    }
    best = std::max(best, euclid_dist(p.at(w.hi), p.at(w.lo), p.dim) /
                              std::pow(w.cells() * h, beta));
    return best;
}

double p_variation(const GridPath& p, double pexp) {
    require(pexp >= 1.0, "p_variation: p must be >= 1");
    // best[j] = sup over partitions of [0, j] of sum |dx|^p; the sup is
    // attained on some node subset, so DP over the last partition point.
    std::vector<double> best(size_t(p.n) + 1, 0.0);
    for (int j = 1; j <= p.n; ++j) {
        double b = 0.0;
        for (int i = 0; i < j; ++i) {
            const double inc = std::pow(euclid_dist(p.at(j), p.at(i), p.dim), pexp);
            b = std::max(b, best[i] + inc);
        }
        best[j] = b;
    }
    return std::pow(best[p.n], 1.0 / pexp);
}

double sup_norm(const GridPath& p, Window w) {
    w.validate(p);
    double best = 0.0;
    for (int i = w.lo; i <= w.hi; ++i) best = std::max(best, euclid_norm(p.at(i), p.dim));
    return best;
}

GridPath resample(const GridPath& p, int factor) {
    require_arg(factor >= 1, "resample: factor must be >= 1");
    if (factor == 1) return p;
    GridPath out(p.t0, p.T, p.n * factor, p.dim);
    for (int i = 0; i <= out.n; ++i) {
        const int c = std::min(i / factor, p.n - 1);
        const double w = double(i - c * factor) / factor;
        for (int k = 0; k < p.dim; ++k)
            out(i, k) = (1.0 - w) * p(c, k) + w * p(c + 1, k);
    }
    // Exact at original nodes.
    for (int i = 0; i <= p.n; ++i)
        for (int k = 0; k < p.dim; ++k) out(i * factor, k) = p(i, k);
    return out;
}

void write_path_csv(const GridPath& p, const std::string& filename) {
    std::FILE* f = std::fopen(filename.c_str(), "w");
    if (!f) throw std::runtime_error("write_path_csv: cannot open " + filename);
    std::fprintf(f, "t");
    for (int k = 1; k <= p.dim; ++k) std::fprintf(f, ",x%d", k);
    std::fprintf(f, "\n");
    for (int i = 0; i <= p.n; ++i) {
        std::fprintf(f, "%.17g", p.node(i));
        for (int k = 0; k < p.dim; ++k) std::fprintf(f, ",%.17g", p(i, k));
        std::fprintf(f, "\n");
    }
    std::fclose(f);
}

GridPath read_path_csv(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw std::runtime_error("read_path_csv: cannot open " + filename);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_path_csv: empty file");
    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        require(row.size() >= 2, "read_path_csv: row with fewer than two columns");
        times.push_back(row[0]);
        rows.push_back(std::vector<double>(row.begin() + 1, row.end()));
    }
    const int n = int(times.size()) - 1;
    require(n >= 1, "read_path_csv: need at least two rows");
    const int dim = int(rows[0].size());
    const double h = (times.back() - times.front()) / n;
    require(h > 0.0, "read_path_csv: non-increasing time column");
    for (int i = 0; i <= n; ++i) {
        require(int(rows[i].size()) == dim, "read_path_csv: ragged rows");
        const double expected = times.front() + i * h;
        if (std::abs(times[i] - expected) > 1e-9 * std::max(1.0, std::abs(times.back())))
            throw std::domain_error("read_path_csv: grid not equispaced");
    }
    GridPath p(times.front(), times.back(), n, dim);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k < dim; ++k) p(i, k) = rows[i][k];
    p.check_finite();
    return p;
}

}  // namespace fracrough
