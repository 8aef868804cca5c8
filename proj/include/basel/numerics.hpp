#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace basel {

/// Absolute/relative acceptance bounds plus a work cap shared by the
/// quadrature and summation engines.
///
/// Two values agree when |a - b| <= abs_tol + rel_tol * max(|a|, |b|).
/// At least one of the two bounds must be positive.
class Tolerance {
 public:
  static constexpr double kDefaultAbs = 1e-10;
  static constexpr double kDefaultRel = 1e-10;
  static constexpr std::size_t kDefaultMaxWork = 2'000'000;

  constexpr Tolerance() = default;
  Tolerance(double abs_tol, double rel_tol,
            std::size_t max_work = kDefaultMaxWork);

  double abs_tol() const { return abs_tol_; }
  double rel_tol() const { return rel_tol_; }
  std::size_t max_work() const { return max_work_; }

  bool pass(double a, double b) const;

  /// Error budget available around a value of magnitude |scale|.
  double budget(double scale) const {
    return abs_tol_ + rel_tol_ * std::abs(scale);
  }

  /// Same work cap, both bounds multiplied by `factor`.
  Tolerance scaled(double factor) const;
  Tolerance with_max_work(std::size_t max_work) const;

 private:
  double abs_tol_ = kDefaultAbs;
  double rel_tol_ = kDefaultRel;
  std::size_t max_work_ = kDefaultMaxWork;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double compensated_sum(std::span<const double> terms);

/// Reference constants. Literals carry 30 significant digits; each one is
/// re-derived independently in tests/numerics_test.cpp.
struct ConstantsTable {
  // Digits of pi (OEIS A000796).
  static constexpr double pi = 3.14159265358979323846264338328;
  // log 2 (OEIS A002162).
  static constexpr double log2 = 0.693147180559945309417232121458;
  // zeta(2) = pi^2/6 (OEIS A013661).
  static constexpr double zeta2 = 1.64493406684822643647241516665;
  // Apery's constant zeta(3) (OEIS A002117).
  static constexpr double zeta3 = 1.20205690315959428539973816151;
  // Catalan's constant G (OEIS A006752).
  static constexpr double catalan = 0.915965594177219015054603514932;
};

inline constexpr ConstantsTable constants{};

double zeta3_reference();
double catalan_reference();

}  // namespace basel
