#pragma once

#include <cstddef>
#include <vector>

#include "basel/rational.hpp"

namespace basel {

/// Truncated formal power series with exact coefficients. Coefficients past
/// `order()` are unknown, not zero.
class RationalPowerSeries {
 public:
  explicit RationalPowerSeries(std::vector<BigRational> coefficients);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t degree) const {
    return coeffs_.at(degree);
  }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  /// Cauchy product truncated to min(order(), other.order()).
  friend RationalPowerSeries operator*(const RationalPowerSeries& f,
                                       const RationalPowerSeries& g);
  friend bool operator==(const RationalPowerSeries&,
                         const RationalPowerSeries&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

RationalPowerSeries series_pow(const RationalPowerSeries& base, unsigned p);

/// Maclaurin series of arctan x through degree `order`.
RationalPowerSeries arctan_series(std::size_t order);

// Harmonic-type partial sums. All return 0 for n = 0.
BigRational harmonic(unsigned n);         // 1 + 1/2 + ... + 1/n
BigRational skew_harmonic(unsigned n);    // 1 - 1/2 + ... + (-1)^(n-1)/n
BigRational odd_harmonic(unsigned n);     // 1 + 1/3 + ... + 1/(2n-1)
BigRational leibniz_partial(unsigned n);  // 1 - 1/3 + ... + (-1)^(n-1)/(2n-1)

// Memoized double images of the exact sequences above, for series terms.
double skew_harmonic_value(unsigned n);
double odd_harmonic_value(unsigned n);
double leibniz_partial_value(unsigned n);

/// Signed Stirling numbers of the first kind:
/// s(k+1, p) = s(k, p-1) - k s(k, p), s(0, 0) = 1; zero outside 0 <= p <= k.
BigInt stirling_first(unsigned k, unsigned p);

/// Lah numbers L(n, k) = C(n-1, k-1) n!/k!; requires n, k >= 1, zero for k > n.
BigInt lah(unsigned n, unsigned k);

/// Coefficient of x^n in (arctan x)^p, from the binomial/Stirling closed
/// form. Zero when n < p or n - p is odd. Requires n, p >= 1.
BigRational arctan_power_coeff(unsigned n, unsigned p);

/// Same coefficient from the Lah/Stirling closed form.
BigRational arctan_power_coeff_lah(unsigned n, unsigned p);

/// Memoized double image of arctan_power_coeff.
double arctan_power_coeff_value(unsigned n, unsigned p);

}  // namespace basel
