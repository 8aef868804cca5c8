#include "basel/numerics.hpp"

#include <algorithm>

namespace basel {

Tolerance::Tolerance(double abs_tol, double rel_tol, std::size_t max_work)
    : abs_tol_(abs_tol), rel_tol_(rel_tol), max_work_(max_work) {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw std::invalid_argument("tolerance bounds must be nonnegative");
  }
  if (abs_tol == 0.0 && rel_tol == 0.0) {
    throw std::invalid_argument("at least one tolerance bound must be active");
  }
  if (max_work == 0) {
    throw std::invalid_argument("max_work must be positive");
  }
}

bool Tolerance::pass(double a, double b) const {
  if (a == b) return true;  // covers equal infinities
  return std::abs(a - b) <=
         abs_tol_ + rel_tol_ * std::max(std::abs(a), std::abs(b));
}

Tolerance Tolerance::scaled(double factor) const {
  return Tolerance(abs_tol_ * factor, rel_tol_ * factor, max_work_);
}

Tolerance Tolerance::with_max_work(std::size_t max_work) const {
  return Tolerance(abs_tol_, rel_tol_, max_work);
}

double compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

double zeta3_reference() { return ConstantsTable::zeta3; }

double catalan_reference() { return ConstantsTable::catalan; }

}  // namespace basel
