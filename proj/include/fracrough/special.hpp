#pragma once

#include <memory>
#include <vector>

#include "fracrough/common.hpp"

namespace fracrough {

// The Beta-weighted kernel profile phi(z) = C_a * int_0^1 (1-q)^{2a-2} q^{-a} (1+qz)^{-1} dq
// for 1/2 < a < 1, with C_a = 1/(a*Gamma(a)*Gamma(2a-1)), plus the auxiliary
// profiles entering the kernel derivatives:
//   chi(z)   = (a-1)*phi(z) - z*phi'(z)                  (d/d eta of G)
//   gam(z)   = (1-a)*phi(z) + (1+z)*phi'(z)              (d/d xi of G, second part)
//   psi(z)   = psi1 + psi2                               (d2/dxi deta of G)
// Values are served from log-z interpolation tables on |log z| <= 12 and by
// direct quadrature outside.
class PhiFamily {
  public:
    explicit PhiFamily(double alpha);

    double alpha() const { return alpha_; }
    double C() const { return C_; }

    double phi(double z) const;
    double phi_prime(double z) const;
    double chi(double z) const { return (alpha_ - 1.0) * phi(z) - z * phi_prime(z); }
    double gam(double z) const { return (1.0 - alpha_) * phi(z) + (1.0 + z) * phi_prime(z); }
    double psi(double z) const;

    // Direct quadrature evaluations (no table); used for table construction
    // and for the property checks.
    double phi_direct(double z) const;
    double phi_prime_direct(double z) const;
    double psi2_direct(double z) const;

    // phi(0) = C_a * B(2a-1, 1-a).
    double phi_at_zero() const;

    // Shared per-alpha instance.
    static const PhiFamily& get(double alpha);

  private:
    double table_lookup(const std::vector<double>& tab, double z) const;

    double alpha_;
    double C_;
    double log_lo_ = -12.0, log_hi_ = 12.0;
    int npts_ = 2048;
    std::vector<double> phi_tab_, dphi_tab_, psi2_tab_;
};

}  // namespace fracrough
