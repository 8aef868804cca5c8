#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "basel/numerics.hpp"

namespace basel {

enum class Domain { unit_interval, semi_infinite };

enum class EndpointBehavior { regular, log_singular, inverse_sqrt_singular };

/// Integrand plus the facts the integrator needs about its endpoints.
///
/// The callable receives the abscissa x and an accurately computed companion
/// value: 1 - x on the unit interval, 1/x on the half-line. Integrands that
/// are singular at x = 1 should use the companion instead of forming 1 - x.
struct IntegrandSpec {
  using Function = std::function<double(double x, double companion)>;

  Function f;
  Domain domain = Domain::unit_interval;
  EndpointBehavior left = EndpointBehavior::regular;
  EndpointBehavior right = EndpointBehavior::regular;

  static IntegrandSpec unit(Function f,
                            EndpointBehavior left = EndpointBehavior::regular,
                            EndpointBehavior right = EndpointBehavior::regular);
  static IntegrandSpec unit(std::function<double(double)> f,
                            EndpointBehavior left = EndpointBehavior::regular,
                            EndpointBehavior right = EndpointBehavior::regular);
  static IntegrandSpec half_line(
      Function f, EndpointBehavior left = EndpointBehavior::regular);
  static IntegrandSpec half_line(
      std::function<double(double)> f,
      EndpointBehavior left = EndpointBehavior::regular);
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Thrown when the integrand returns NaN or infinity at an interior node.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  NonFiniteIntegrand(double abscissa, double value);
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

/// Double-exponential (tanh-sinh) quadrature over (0, 1).
///
/// Trapezoidal levels with successive halving of the step, at most 12
/// halvings. The error estimate is 10 * |I_k - I_(k-1)| plus a rounding
/// floor; endpoints are never evaluated. A result that misses the tolerance
/// within the level or work cap comes back with converged == false.
QuadratureResult integrate_unit(const IntegrandSpec& spec,
                                const Tolerance& tol = {});

/// Integral over (0, inf), computed as int_0^1 f(x) dx + int_0^1 f(1/u)/u^2 du.
QuadratureResult integrate_semi_infinite(const IntegrandSpec& spec,
                                         const Tolerance& tol = {});

/// Dispatches on spec.domain.
QuadratureResult integrate(const IntegrandSpec& spec, const Tolerance& tol = {});

}  // namespace basel
