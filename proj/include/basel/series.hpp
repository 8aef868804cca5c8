#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "basel/numerics.hpp"

namespace basel {

enum class SignPattern { positive, alternating, unknown };

enum class SummationMethod { direct, alternating_euler, richardson };

const char* to_string(SummationMethod m);

struct TermGenerator {
  std::function<double(long)> term;
  long first_index = 0;
  SignPattern sign = SignPattern::unknown;
};

struct SummationResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double remainder_bound = 0.0;
  SummationMethod method = SummationMethod::direct;
  bool converged = false;
};

/// Upper bound on sum_{n >= next_index} term(n), given term(next_index).
using TailBound = std::function<double(long next_index, double next_term)>;

/// Tail bound for positive terms whose successive ratios never exceed `ratio`.
TailBound geometric_tail(double ratio);

/// Two consecutive same-sign terms in a series declared alternating.
class SignPatternViolation : public std::runtime_error {
 public:
  explicit SignPatternViolation(long index);
  long index() const { return index_; }

 private:
  long index_;
};

/// Plain partial sums. The remainder bound is |next term| for alternating
/// (and, heuristically, unknown) patterns and `tail(...)` for positive
/// series, which must supply one. Stops once the bound fits the tolerance
/// budget or max_work terms have been used.
SummationResult sum_direct(const TermGenerator& g, const Tolerance& tol = {},
                           const TailBound& tail = {});

/// Iterated Euler transform (repeated pairwise averaging) of the partial
/// sums of an alternating series.
///
/// Each new partial sum extends the averaging triangle by one anti-diagonal.
/// The estimate is the entry of that anti-diagonal whose transformed term
/// (difference with the previous anti-diagonal at the same depth) is
/// smallest. Summation stops when that term and the change in the estimate
/// are each within half the budget; their sum is the remainder bound.
SummationResult sum_alternating_accelerated(const TermGenerator& g,
                                            const Tolerance& tol = {});

/// Entries T[d][M-d], d = 0..M, of the averaging triangle built on the
/// partial sums S_0..S_M, where T[0][i] = S_i and
/// T[d][i] = (T[d-1][i] + T[d-1][i+1]) / 2.
std::vector<double> euler_anti_diagonal(std::span<const double> partial_sums);

/// sum_{n>=1} (h_n/n) (L_n - pi/4), with h_n the odd harmonic numbers and
/// L_n the Leibniz partial sums of pi/4. The sum is pi^3/192; its terms
/// alternate because L_n - pi/4 does.
SummationResult sum_pi_cubed_series(const Tolerance& tol = {});

/// n-th term of sum_pi_cubed_series, n >= 1.
double pi_cubed_series_term(long n);

}  // namespace basel
