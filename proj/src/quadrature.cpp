#include "basel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace basel {

namespace {

constexpr int kMaxHalvings = 12;
constexpr int kMinLevelForConvergence = 3;
constexpr double kSafetyFactor = 10.0;
constexpr double kBelowOne = 1.0 - std::numeric_limits<double>::epsilon() / 2;

// Closest approach to an endpoint, measured through the companion value.
// Regular endpoints contribute nothing measurable below 1e-20; singular ones
// are followed down to 1e-150 so that 1/u^2 on the half-line stays finite.
double endpoint_margin(EndpointBehavior b) {
  return b == EndpointBehavior::regular ? 1e-20 : 1e-150;
}

// Largest t with exp(-pi sinh t) / (1 + ...) still above `margin`.
double t_limit(double margin) {
  return std::asinh(std::log(1.0 / margin) / std::numbers::pi);
}

std::string describe_nonfinite(double x, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand returned " << v << " at abscissa " << x;
  return os.str();
}

class TanhSinh {
 public:
  explicit TanhSinh(const IntegrandSpec& spec)
      : f_(spec.f),
        t_left_(t_limit(endpoint_margin(spec.left))),
        t_right_(t_limit(endpoint_margin(spec.right))) {}

  QuadratureResult run(const Tolerance& tol) {
    QuadratureResult r;
    // Level 0: step 1, all integer nodes.
    add_center();
    for (double t = 1.0; t <= std::max(t_left_, t_right_); t += 1.0) {
      add_pair(t);
    }
    double h = 1.0;
    double previous = h * sum_.value();
    for (int level = 1; level <= kMaxHalvings; ++level) {
      const std::size_t projected = evaluations_ * 2;
      if (projected > tol.max_work()) break;
      h *= 0.5;
      for (double t = h; t <= std::max(t_left_, t_right_); t += 2.0 * h) {
        add_pair(t);
      }
      const double current = h * sum_.value();
      const double rounding =
          8.0 * std::numeric_limits<double>::epsilon() * h * abs_sum_;
      r.value = current;
      r.error_estimate = kSafetyFactor * std::abs(current - previous) + rounding;
      r.evaluations = evaluations_;
      if (level >= kMinLevelForConvergence &&
          r.error_estimate <= tol.budget(current)) {
        r.converged = true;
        return r;
      }
      previous = current;
    }
    if (r.evaluations == 0) {
      r.value = previous;
      r.error_estimate = std::numeric_limits<double>::infinity();
      r.evaluations = evaluations_;
    }
    return r;
  }

 private:
  // t = 0: x = 1/2, weight pi/4.
  void add_center() {
    accumulate(0.5, 0.5, std::numbers::pi / 4.0);
  }

  // Nodes at +t (near x = 1) and -t (near x = 0).
  void add_pair(double t) {
    const double e = std::exp(-std::numbers::pi * std::sinh(t));
    const double inv = 1.0 / (1.0 + e);
    const double near = e * inv;  // distance to the endpoint
    const double far = inv;
    const double w = std::numbers::pi * std::cosh(t) * near * inv;
    if (w == 0.0) return;
    if (t <= t_right_) accumulate(far, near, w);
    if (t <= t_left_) accumulate(near, far, w);
  }

  void accumulate(double x, double complement, double w) {
    // Near x = 1 the abscissa itself rounds to 1; keep it inside and let the
    // companion carry the distance.
    x = std::min(x, kBelowOne);
    const double v = f_(x, complement);
    ++evaluations_;
    if (!std::isfinite(v)) throw NonFiniteIntegrand(x, v);
    sum_.add(w * v);
    abs_sum_ += std::abs(w * v);
  }

  const IntegrandSpec::Function& f_;
  double t_left_;
  double t_right_;
  CompensatedSum sum_;
  double abs_sum_ = 0.0;
  std::size_t evaluations_ = 0;
};

}  // namespace

NonFiniteIntegrand::NonFiniteIntegrand(double abscissa, double value)
    : std::runtime_error(describe_nonfinite(abscissa, value)),
      abscissa_(abscissa) {}

IntegrandSpec IntegrandSpec::unit(Function f, EndpointBehavior left,
                                  EndpointBehavior right) {
  return {std::move(f), Domain::unit_interval, left, right};
}

IntegrandSpec IntegrandSpec::unit(std::function<double(double)> f,
                                  EndpointBehavior left,
                                  EndpointBehavior right) {
  return unit(Function([g = std::move(f)](double x, double) { return g(x); }),
              left, right);
}

IntegrandSpec IntegrandSpec::half_line(Function f, EndpointBehavior left) {
  return {std::move(f), Domain::semi_infinite, left, EndpointBehavior::regular};
}

IntegrandSpec IntegrandSpec::half_line(std::function<double(double)> f,
                                       EndpointBehavior left) {
  return half_line(
      Function([g = std::move(f)](double x, double) { return g(x); }), left);
}

QuadratureResult integrate_unit(const IntegrandSpec& spec,
                                const Tolerance& tol) {
  if (spec.domain != Domain::unit_interval) {
    throw std::invalid_argument("integrate_unit: integrand is not on (0, 1)");
  }
  if (!spec.f) throw std::invalid_argument("integrate_unit: empty integrand");
  return TanhSinh(spec).run(tol);
}

QuadratureResult integrate_semi_infinite(const IntegrandSpec& spec,
                                         const Tolerance& tol) {
  if (spec.domain != Domain::semi_infinite) {
    throw std::invalid_argument(
        "integrate_semi_infinite: integrand is not on (0, inf)");
  }
  if (!spec.f) {
    throw std::invalid_argument("integrate_semi_infinite: empty integrand");
  }
  const auto& f = spec.f;
  const Tolerance half =
      tol.scaled(0.5).with_max_work(std::max<std::size_t>(1, tol.max_work() / 2));

  // (0, 1] as is; [1, inf) folded back with x = 1/u.
  const IntegrandSpec inner = IntegrandSpec::unit(
      IntegrandSpec::Function([&f](double x, double) { return f(x, 1.0 / x); }),
      spec.left, EndpointBehavior::regular);
  const IntegrandSpec outer = IntegrandSpec::unit(
      IntegrandSpec::Function(
          [&f](double u, double) { return f(1.0 / u, u) / (u * u); }),
      EndpointBehavior::log_singular, EndpointBehavior::regular);

  const QuadratureResult a = integrate_unit(inner, half);
  const QuadratureResult b = integrate_unit(outer, half);
  QuadratureResult r;
  r.value = a.value + b.value;
  r.error_estimate = a.error_estimate + b.error_estimate;
  r.evaluations = a.evaluations + b.evaluations;
  r.converged = a.converged && b.converged;
  return r;
}

QuadratureResult integrate(const IntegrandSpec& spec, const Tolerance& tol) {
  return spec.domain == Domain::unit_interval
             ? integrate_unit(spec, tol)
             : integrate_semi_infinite(spec, tol);
}

}  // namespace basel
