#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "basel/numerics.hpp"

namespace basel {

struct Param {
  std::string name;
  double value = 0.0;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Parameter values of one grid point, integer parameter (if any) first.
using ParamPoint = std::vector<Param>;

/// Value of the named parameter; throws std::out_of_range when absent.
double param(const ParamPoint& point, std::string_view name);

/// One side of an identity evaluated at one point.
struct Evaluation {
  double value = 0.0;
  double imag = 0.0;  // only closed forms written over the complex numbers
  double error_bound = 0.0;
  std::size_t evals = 0;
  std::size_t terms = 0;
  bool converged = true;
};

/// Evaluates one side at a grid point. The tolerance is the budget for the
/// engines behind the side (quadrature, summation, polylog).
using Evaluator = std::function<Evaluation(const ParamPoint&, const Tolerance&)>;

struct LimitValue {
  double at = 0.0;
  std::function<double(const ParamPoint&)> value;
};

/// A real parameter ranging over (lo, hi). Grids use interior points only;
/// `endpoints` are evaluated with the general formulas and `limits` replace
/// the right-hand side by a registered limit value.
struct ContinuousDomain {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> endpoints;
  std::vector<LimitValue> limits;
};

struct IntegerDomain {
  std::string name;
  std::vector<int> values;
};

struct IdentityCase {
  std::string id;
  std::string description;
  std::string reference;  // short label naming the identity
  std::optional<IntegerDomain> integer_param = std::nullopt;
  std::optional<ContinuousDomain> continuous_param = std::nullopt;
  Evaluator lhs;
  Evaluator rhs;
  Tolerance default_tol;
  bool rhs_must_be_real = false;  // |Im(rhs)| is checked against the budget
};

struct WorkCounters {
  std::size_t evals = 0;
  std::size_t terms = 0;
};

struct VerificationOutcome {
  std::string id;
  ParamPoint params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool pass = false;
  std::string reason;  // empty when pass
  WorkCounters work;
};

struct ReportSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_converged = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string version;
  std::string timestamp;
  double tol_abs = Tolerance::kDefaultAbs;
  double tol_rel = Tolerance::kDefaultRel;
  std::vector<VerificationOutcome> outcomes;
  ReportSummary summary;
};

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Reason tags carried by failing outcomes.
inline constexpr std::string_view kReasonTolerance = "tolerance";
inline constexpr std::string_view kReasonNotConverged = "not_converged";
inline constexpr std::string_view kReasonImaginary = "imaginary_part";
inline constexpr std::string_view kReasonError = "error";

/// The complete registry, in equation order. Built once.
const std::vector<IdentityCase>& register_all();

/// nullptr when the id is not registered.
const IdentityCase* lookup(std::string_view id);

/// Grid points: every integer value crossed with `grid_size` evenly spaced
/// interior points, the direct endpoints and the limit points.
std::vector<ParamPoint> grid_points(const IdentityCase& c,
                                    std::size_t grid_size);

/// Evaluates both sides at one point and compares them under `tol`. Engines
/// run at a tenth of the comparison budget. Failures are data: engine errors
/// land in `reason` instead of propagating.
VerificationOutcome evaluate_point(const IdentityCase& c,
                                   const ParamPoint& point,
                                   const Tolerance& tol);

/// Verifies one identity over its grid, with the case's default tolerance
/// unless `tol` overrides it. Throws std::out_of_range for unknown ids.
std::vector<VerificationOutcome> verify(
    std::string_view id, std::size_t grid_size,
    const std::optional<Tolerance>& tol = std::nullopt,
    unsigned threads = 1);

/// Verifies the given ids (all when empty). Points may be evaluated on
/// several threads; outcome order is registry order, then grid order.
/// `max_work` replaces the work cap of whichever tolerance applies.
Report verify_all(std::size_t grid_size,
                  const std::optional<Tolerance>& tol = std::nullopt,
                  unsigned threads = 0,
                  const std::vector<std::string>& ids = {},
                  std::optional<std::size_t> max_work = std::nullopt);

ReportSummary summarize(const std::vector<VerificationOutcome>& outcomes);

/// Continuity check of a registered limit: the general right-hand side is
/// evaluated `distance` inside the domain and compared with the limit value.
struct LimitContinuity {
  std::string id;
  ParamPoint limit_point;
  double registered = 0.0;
  double nearby = 0.0;
  double difference = 0.0;
};

std::vector<LimitContinuity> limit_continuity(double distance);

}  // namespace basel
