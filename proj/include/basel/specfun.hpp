#pragma once

#include <complex>
#include <stdexcept>

#include "basel/numerics.hpp"

namespace basel {

/// Complex values use std::complex with the principal branch of log:
/// imaginary part in (-pi, pi].
using ComplexValue = std::complex<double>;

/// Li_1 at z = 1.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A special-function evaluation whose internal quadrature missed its
/// tolerance.
class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance used by special functions when the caller does not pass one.
Tolerance specfun_default_tolerance();

/// Li_p(x) for real -1 <= x <= 1, p >= 1.
///
/// |x| <= 1/2 sums the power series with the geometric tail bound; larger
/// |x| integrates Li_p(x) = (-1)^(p-1)/(p-1)! int_0^1 (log t)^(p-1) x/(1-xt) dt,
/// the closed form of p-1 applications of Li_(q+1)(x) = int_0^1 Li_q(xt)/t dt.
/// Li_2(+-1) and Li_3(+-1) come from the constants table.
double polylog_real(int p, double x,
                    const Tolerance& tol = specfun_default_tolerance());

/// Li_p(z) on the closed unit disc (|z| <= 1 + 1e-12) with principal-branch
/// semantics, same evaluation strategy as polylog_real.
ComplexValue polylog_complex(int p, ComplexValue z,
                             const Tolerance& tol = specfun_default_tolerance());

/// beta(z) = sum_{k>=0} (-1)^k / (z + k) for z > 0.
double incomplete_beta(double z);

/// Closed-form side of Ramanujan's evaluation of sum h_n alpha^(2n) / n^2,
/// 0 < alpha < 1.
double ramanujan_rhs(double alpha,
                     const Tolerance& tol = specfun_default_tolerance());

/// Closed form for sum (-1)^(n-1) h_n alpha^(2n) / n^2, obtained from the
/// Ramanujan formula at i*alpha. Complex-valued as written; the imaginary
/// part vanishes analytically. 0 < alpha <= 1.
ComplexValue alternating_odd_harmonic_rhs(
    double alpha, const Tolerance& tol = specfun_default_tolerance());

/// -log(a) log((1-a)/(1+a)) - Li_2(a) + Li_2(-a) + pi^2/4, which equals
/// Li_2((1-a)/(1+a)) - Li_2((a-1)/(1+a)) on 0 < a < 1.
double dilog_identity_rhs(double alpha,
                          const Tolerance& tol = specfun_default_tolerance());

}  // namespace basel
