#include "basel/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "basel/quadrature.hpp"

namespace basel {

namespace {

constexpr double kSeriesRadius = 0.5;
constexpr double kDiscSlack = 1e-12;

void check_order(int p) {
  if (p < 1) throw std::domain_error("polylog order must be >= 1");
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// log t, accurate near t = 1 through the complement.
double log_unit(double t, double tc) {
  return t < 0.5 ? std::log(t) : std::log1p(-tc);
}

template <typename T>
T polylog_series(int p, T z) {
  const double r = std::abs(z);
  T sum{};
  T power = z;
  for (int n = 1;; ++n) {
    sum += power / std::pow(static_cast<double>(n), p);
    const double next = static_cast<double>(n) + 1.0;
    const double tail = std::pow(r, next) / (std::pow(next, p) * (1.0 - r));
    if (tail <= 0.25 * std::numeric_limits<double>::epsilon() * std::abs(sum) ||
        tail < std::numeric_limits<double>::min()) {
      break;
    }
    power *= z;
  }
  return sum;
}

// (-1)^(p-1)/(p-1)! * int_0^1 (log t)^(p-1) g(t) dt for a real integrand g.
double polylog_integral(int p, const IntegrandSpec::Function& g,
                        const Tolerance& tol) {
  const int q = p - 1;
  const double prefactor = (q % 2 == 0 ? 1.0 : -1.0) / factorial(q);
  const auto spec = IntegrandSpec::unit(
      IntegrandSpec::Function([q, &g](double t, double tc) {
        return std::pow(log_unit(t, tc), q) * g(t, tc);
      }),
      EndpointBehavior::log_singular, EndpointBehavior::log_singular);
  // The raw integral is (p-1)! times the polylog value.
  const Tolerance scaled(tol.abs_tol() * factorial(q), tol.rel_tol(),
                         tol.max_work());
  const QuadratureResult r = integrate_unit(spec, scaled);
  if (!r.converged) {
    throw NotConverged("polylog: quadrature did not converge (order " +
                       std::to_string(p) + ")");
  }
  return prefactor * r.value;
}

double incomplete_beta_tail(double a) {
  // Euler-Maclaurin tail of sum_{k>=K} [1/(a+2(k-K)) - 1/(a+2(k-K)+1)],
  // a = z + 2K: integral, half the first term, and Bernoulli corrections
  // B_2j 2^(2j-1)/(2j) [a^(-2j) - (a+1)^(-2j)].
  static constexpr std::array<double, 5> kBernoulli = {
      1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
  CompensatedSum acc;
  acc += 0.5 * std::log1p(1.0 / a);
  acc += 0.5 * (1.0 / a - 1.0 / (a + 1.0));
  double pow2 = 2.0;  // 2^(2j-1)
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    const double e = 2.0 * static_cast<double>(j);
    acc += kBernoulli[j - 1] * pow2 / e *
           (std::pow(a, -e) - std::pow(a + 1.0, -e));
    pow2 *= 4.0;
  }
  return acc.value();
}

}  // namespace

Tolerance specfun_default_tolerance() { return Tolerance(1e-14, 1e-14); }

double polylog_real(int p, double x, const Tolerance& tol) {
  check_order(p);
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("polylog_real: |x| > 1");
  }
  if (p == 1) {
    if (x == 1.0) throw PoleError("polylog_real: Li_1 has a pole at 1");
    return -std::log1p(-x);
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0 && p == 2) return constants.zeta2;
  if (x == 1.0 && p == 3) return constants.zeta3;
  if (x == -1.0 && p == 2) return -0.5 * constants.zeta2;
  if (x == -1.0 && p == 3) return -0.75 * constants.zeta3;
  if (std::abs(x) <= kSeriesRadius) return polylog_series(p, x);

  const double one_minus_x = 1.0 - x;
  return polylog_integral(
      p,
      [x, one_minus_x](double, double tc) {
        // 1 - x t = (1 - x) + x (1 - t)
        return x / (one_minus_x + x * tc);
      },
      tol);
}

ComplexValue polylog_complex(int p, ComplexValue z, const Tolerance& tol) {
  check_order(p);
  if (std::abs(z) > 1.0 + kDiscSlack) {
    throw std::domain_error("polylog_complex: |z| > 1");
  }
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    return {polylog_real(p, z.real(), tol), 0.0};
  }
  if (p == 1) return -std::log(1.0 - z);
  if (std::abs(z) <= kSeriesRadius) return polylog_series(p, z);

  const ComplexValue one_minus_z = 1.0 - z;
  auto kernel = [z, one_minus_z](double tc) {
    return z / (one_minus_z + z * tc);
  };
  const double re = polylog_integral(
      p, [&kernel](double, double tc) { return kernel(tc).real(); }, tol);
  const double im = polylog_integral(
      p, [&kernel](double, double tc) { return kernel(tc).imag(); }, tol);
  return {re, im};
}

double incomplete_beta(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::domain_error("incomplete_beta: z must be positive");
  }
  // Pair consecutive terms: beta(z) = sum_k 1/((z+2k)(z+2k+1)), summed
  // directly until z + 2K >= 40, then the tail in closed form.
  CompensatedSum acc;
  double a = z;
  while (a < 40.0) {
    acc += 1.0 / (a * (a + 1.0));
    a += 2.0;
  }
  acc += incomplete_beta_tail(a);
  return acc.value();
}

double ramanujan_rhs(double alpha, const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("ramanujan_rhs: alpha must lie in (0, 1)");
  }
  const double u = (1.0 - alpha) / (1.0 + alpha);
  const double log_u = std::log1p(-alpha) - std::log1p(alpha);
  const double log_a = std::log(alpha);

  const double li2_diff = polylog_real(2, u, tol) - polylog_real(2, -u, tol);
  const std::array<double, 5> terms = {
      0.5 * log_a * log_u * log_u,
      li2_diff * log_u,
      -polylog_real(3, u, tol),
      polylog_real(3, -u, tol),
      1.75 * constants.zeta3,
  };
  return compensated_sum(terms);
}

ComplexValue alternating_odd_harmonic_rhs(double alpha, const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error(
        "alternating_odd_harmonic_rhs: alpha must lie in (0, 1]");
  }
  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  // w = (1 - i a)/(1 + i a) lies on the unit circle with Re w >= 0, so
  // neither 1 - w nor 1 + w crosses the negative real axis.
  const double d = 1.0 + alpha * alpha;
  const ComplexValue w{(1.0 - alpha * alpha) / d, -2.0 * alpha / d};
  if (!(w.real() >= 0.0)) {
    throw std::logic_error("alternating_odd_harmonic_rhs: branch-cut crossing");
  }

  const double at = std::atan(alpha);
  const ComplexValue li3_diff =
      polylog_complex(3, w, tol) - polylog_complex(3, -w, tol);
  const ComplexValue li2_diff = polylog_complex(2, ComplexValue{0.0, alpha}, tol) -
                                polylog_complex(2, ComplexValue{0.0, -alpha}, tol);
  const std::array<ComplexValue, 4> terms = {
      li3_diff,
      -2.0i * at * (li2_diff - pi * pi / 4.0),
      -2.0 * (0.5i * pi + std::log(alpha)) * at * at,
      ComplexValue{-1.75 * constants.zeta3, 0.0},
  };
  CompensatedSum re;
  CompensatedSum im;
  for (const auto& t : terms) {
    re += t.real();
    im += t.imag();
  }
  return {re.value(), im.value()};
}

double dilog_identity_rhs(double alpha, const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("dilog_identity_rhs: alpha must lie in (0, 1)");
  }
  const double log_u = std::log1p(-alpha) - std::log1p(alpha);
  const std::array<double, 4> terms = {
      -std::log(alpha) * log_u,
      -polylog_real(2, alpha, tol),
      polylog_real(2, -alpha, tol),
      constants.pi * constants.pi / 4.0,
  };
  return compensated_sum(terms);
}

}  // namespace basel
