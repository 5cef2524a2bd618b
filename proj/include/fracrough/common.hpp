#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracrough {

using std::size_t;

inline double gamma_fn(double x) { return std::tgamma(x); }

// 1/Γ(x), the form most prefactors take.
inline double rgamma(double x) { return 1.0 / std::tgamma(x); }

inline double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

inline double sqr(double x) { return x * x; }

// splitmix64: stream derivation for seedable, splittable RNG streams.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4d49fde3e64bdULL;
    return z ^ (z >> 31);
}

inline uint64_t derive_stream_seed(uint64_t base, uint64_t stream) {
    uint64_t s = base;
    uint64_t a = splitmix64(s);
    s = base ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    uint64_t b = splitmix64(s);
    return a ^ (b + 0x632be59bd9b4e019ULL + (stream << 1));
}

constexpr const char* kGeneratorId = "mt19937_64/Box-Muller v1";

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

inline void require_arg(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace fracrough
