#include "basel/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "basel/combinatorics.hpp"

namespace basel {

namespace {

// Sign checks start after this many terms.
constexpr long kSignGraceTerms = 2;
// Deepest averaging level kept; deeper levels stop paying off in double.
constexpr std::size_t kMaxEulerDepth = 96;
constexpr std::size_t kMinAcceleratedTerms = 4;

}  // namespace

const char* to_string(SummationMethod m) {
  switch (m) {
    case SummationMethod::direct:
      return "direct";
    case SummationMethod::alternating_euler:
      return "alternating_euler";
    case SummationMethod::richardson:
      return "richardson";
  }
  return "unknown";
}

SignPatternViolation::SignPatternViolation(long index)
    : std::runtime_error("alternating series has two same-sign terms ending at "
                         "index " +
                         std::to_string(index)),
      index_(index) {}

TailBound geometric_tail(double ratio) {
  if (!(ratio >= 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("geometric_tail: ratio must lie in [0, 1)");
  }
  return [ratio](long, double next_term) {
    return std::abs(next_term) / (1.0 - ratio);
  };
}

SummationResult sum_direct(const TermGenerator& g, const Tolerance& tol,
                           const TailBound& tail) {
  if (g.sign == SignPattern::positive && !tail) {
    throw std::invalid_argument("sum_direct: positive series need a tail bound");
  }
  SummationResult r;
  r.method = SummationMethod::direct;
  CompensatedSum acc;
  long n = g.first_index;
  double current = g.term(n);
  for (;;) {
    acc += current;
    ++r.terms_used;
    const double next = g.term(n + 1);
    r.value = acc.value();
    r.remainder_bound =
        g.sign == SignPattern::positive ? tail(n + 1, next) : std::abs(next);
    if (r.remainder_bound <= tol.budget(r.value)) {
      r.converged = true;
      return r;
    }
    if (r.terms_used >= tol.max_work()) return r;
    current = next;
    ++n;
  }
}

std::vector<double> euler_anti_diagonal(std::span<const double> partial_sums) {
  std::vector<double> diag;
  std::vector<double> next;
  for (double s : partial_sums) {
    next.resize(diag.size() + 1);
    next[0] = s;
    for (std::size_t j = 1; j < next.size(); ++j) {
      next[j] = 0.5 * (diag[j - 1] + next[j - 1]);
    }
    diag.swap(next);
  }
  return diag;
}

SummationResult sum_alternating_accelerated(const TermGenerator& g,
                                            const Tolerance& tol) {
  SummationResult r;
  r.method = SummationMethod::alternating_euler;
  CompensatedSum partial;
  std::vector<double> diag;  // T[j][M-j] for the latest M
  std::vector<double> next;
  double previous_term = 0.0;
  double previous_estimate = std::numeric_limits<double>::quiet_NaN();

  for (long i = 0;; ++i) {
    const long n = g.first_index + i;
    const double t = g.term(n);
    if (i >= kSignGraceTerms && t * previous_term > 0.0) {
      throw SignPatternViolation(n);
    }
    if (t != 0.0) previous_term = t;
    partial += t;
    ++r.terms_used;

    next.resize(std::min(diag.size() + 1, kMaxEulerDepth + 1));
    next[0] = partial.value();
    for (std::size_t j = 1; j < next.size(); ++j) {
      next[j] = 0.5 * (diag[j - 1] + next[j - 1]);
    }

    if (!diag.empty()) {
      // Transformed term at depth j: T[j][M-j] - T[j][M-j-1].
      std::size_t best = 0;
      double best_step = std::abs(next[0] - diag[0]);
      for (std::size_t j = 1; j < diag.size() && j < next.size(); ++j) {
        const double step = std::abs(next[j] - diag[j]);
        if (step <= best_step) {
          best_step = step;
          best = j;
        }
      }
      const double estimate = next[best];
      const double change = std::isnan(previous_estimate)
                                ? std::numeric_limits<double>::infinity()
                                : std::abs(estimate - previous_estimate);
      r.value = estimate;
      r.remainder_bound = best_step + change;
      const double half_budget = 0.5 * tol.budget(estimate);
      if (r.terms_used >= kMinAcceleratedTerms && best_step <= half_budget &&
          change <= half_budget) {
        r.converged = true;
        return r;
      }
      previous_estimate = estimate;
    } else {
      r.value = next[0];
      r.remainder_bound = std::numeric_limits<double>::infinity();
    }
    diag.swap(next);
    if (r.terms_used >= tol.max_work()) return r;
  }
}

double pi_cubed_series_term(long n) {
  if (n < 1) throw std::invalid_argument("pi_cubed_series_term: n >= 1");
  const auto k = static_cast<unsigned>(n);
  return odd_harmonic_value(k) / static_cast<double>(n) *
         (leibniz_partial_value(k) - constants.pi / 4.0);
}

SummationResult sum_pi_cubed_series(const Tolerance& tol) {
  return sum_alternating_accelerated(
      {pi_cubed_series_term, 1, SignPattern::alternating}, tol);
}

}  // namespace basel
