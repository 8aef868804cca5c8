// Registry of the identities: each case pairs two independently computed
// sides (quadrature, series, or closed form) over a parameter domain.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

#include "basel/combinatorics.hpp"
#include "basel/identities.hpp"
#include "basel/quadrature.hpp"
#include "basel/series.hpp"
#include "basel/specfun.hpp"

namespace basel {

namespace {

constexpr double kPi = ConstantsTable::pi;
constexpr double kLog2 = ConstantsTable::log2;
constexpr double kZeta2 = ConstantsTable::zeta2;
constexpr double kZeta3 = ConstantsTable::zeta3;
constexpr double kCatalan = ConstantsTable::catalan;

// Below this abscissa integrands with a removable singularity at 0 return
// their limit value.
constexpr double kRemovableCutoff = 1e-12;

using Fn = IntegrandSpec::Function;
using EB = EndpointBehavior;

// --- evaluation helpers -----------------------------------------------------

Evaluation exact(double v) { return {v, 0.0, 0.0, 0, 0, true}; }

Evaluation from_quadrature(const QuadratureResult& q, double scale = 1.0) {
  return {scale * q.value, 0.0, std::abs(scale) * q.error_estimate,
          q.evaluations, 0, q.converged};
}

Evaluation from_sum(const SummationResult& s, double scale = 1.0) {
  return {scale * s.value, 0.0, std::abs(scale) * s.remainder_bound, 0,
          s.terms_used, s.converged};
}

// Engine tolerance for a quantity that is later multiplied by `scale`.
Tolerance inner_tolerance(const Tolerance& tol, double scale) {
  return Tolerance(tol.abs_tol() / std::abs(scale), tol.rel_tol(),
                   tol.max_work());
}

// Polylogs run at the tighter of the engine budget and their own default.
Tolerance polylog_tolerance(const Tolerance& tol) {
  const Tolerance d = specfun_default_tolerance();
  return Tolerance(std::min(tol.abs_tol(), d.abs_tol()),
                   std::min(tol.rel_tol(), d.rel_tol()), tol.max_work());
}

double li(int p, double x, const Tolerance& tol) {
  return polylog_real(p, x, polylog_tolerance(tol));
}

Evaluation quad(const IntegrandSpec& spec, const Tolerance& tol,
                double scale = 1.0) {
  return from_quadrature(integrate(spec, inner_tolerance(tol, scale)), scale);
}

Evaluation alternating_sum(std::function<double(long)> term, long first,
                           const Tolerance& tol, double scale = 1.0) {
  return from_sum(
      sum_alternating_accelerated({std::move(term), first,
                                   SignPattern::alternating},
                                  inner_tolerance(tol, scale)),
      scale);
}

double alpha_of(const ParamPoint& pt) { return param(pt, "alpha"); }
double beta_of(const ParamPoint& pt) { return param(pt, "beta"); }
int p_of(const ParamPoint& pt) {
  return static_cast<int>(std::lround(param(pt, "p")));
}

// log x on (0, 1), accurate near 1 through the complement.
double log_unit(double x, double xc) {
  return x < 0.5 ? std::log(x) : std::log1p(-xc);
}

// log(1 - b x) on (0, 1), accurate near x = 1 when b = 1.
double log_one_minus(double b, double x, double xc) {
  const double bx = b * x;
  return bx < 0.5 ? std::log1p(-bx) : std::log((1.0 - b) + b * xc);
}

// Terms shared by several series.
double skew_gap(long n) {  // log 2 - H_n^-
  return kLog2 - skew_harmonic_value(static_cast<unsigned>(n));
}
double leibniz_gap(long n) {  // L_n - pi/4
  return leibniz_partial_value(static_cast<unsigned>(n)) - kPi / 4.0;
}
double odd_h(long n) { return odd_harmonic_value(static_cast<unsigned>(n)); }
double alt_sign(long n) { return n % 2 == 1 ? 1.0 : -1.0; }  // (-1)^(n-1)

double arctan_power(unsigned n, unsigned p) {
  return arctan_power_coeff_value(n, p);
}

// sum_m A(p+2m, p) beta((p+2m+1)/2) alpha^(p+2m): the series side of the
// integral of (arctan a x)^p / (1 + x^2), up to the factor 1/2.
Evaluation arctan_power_beta_sum(int p, double alpha, const Tolerance& tol,
                                 double scale) {
  return alternating_sum(
      [p, alpha](long m) {
        const auto n = static_cast<unsigned>(p + 2 * m);
        return arctan_power(n, static_cast<unsigned>(p)) *
               incomplete_beta(0.5 * (n + 1.0)) * std::pow(alpha, n);
      },
      0, tol, scale);
}

ContinuousDomain unit_alpha(std::vector<double> endpoints = {},
                            std::vector<LimitValue> limits = {}) {
  return {"alpha", 0.0, 1.0, std::move(endpoints), std::move(limits)};
}

std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> cases;
  const Tolerance tol_default;
  const Tolerance tol_9(1e-9, 1e-9);
  const Tolerance tol_8(1e-8, 1e-8);
  const Tolerance tol_7(1e-7, 1e-7);

  auto add = [&cases](IdentityCase c) { cases.push_back(std::move(c)); };

  // Leibniz's integral for the Basel sum.
  add({.id = "E1",
       .description = "-int_0^1 log(1-t)/t dt = pi^2/6",
       .reference = "Leibniz integral for zeta(2)",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::unit(
                             Fn([](double x, double xc) {
                               if (x < kRemovableCutoff) return 1.0;
                               return -log_one_minus(1.0, x, xc) / x;
                             }),
                             EB::regular, EB::log_singular),
                         tol);
           },
       .rhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(kZeta2); },
       .default_tol = tol_default});

  add({.id = "E2",
       .description =
           "int_0^1 arcsin(a x)/sqrt(1-x^2) dx = [Li2(a) - Li2(-a)]/2",
       .reference = "arcsine integral",
       .continuous_param = unit_alpha({1.0}),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit(
                             Fn([a](double x, double xc) {
                               return std::asin(a * x) /
                                      std::sqrt(xc * (1.0 + x));
                             }),
                             EB::regular, EB::inverse_sqrt_singular),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return exact(0.5 * (li(2, a, tol) - li(2, -a, tol)));
           },
       .default_tol = tol_default});

  auto arctan_half_line = [](const ParamPoint& pt, const Tolerance& tol) {
    const double a = alpha_of(pt);
    return quad(IntegrandSpec::half_line(
                    [a](double x) { return std::atan(a * x) / (1.0 + x * x); }),
                tol, 2.0);
  };

  add({.id = "E4",
       .description = "2 int_0^inf arctan(a x)/(1+x^2) dx = log a log((1-a)/"
                      "(1+a)) + Li2(a) - Li2(-a)",
       .reference = "arctangent integral over the half-line",
       .continuous_param = unit_alpha(
           {}, {{0.0, [](const ParamPoint&) { return 0.0; }},
                {1.0, [](const ParamPoint&) { return kPi * kPi / 4.0; }}}),
       .lhs = arctan_half_line,
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             const double log_ratio = std::log1p(-a) - std::log1p(a);
             return exact(std::log(a) * log_ratio + li(2, a, tol) -
                          li(2, -a, tol));
           },
       .default_tol = tol_default});

  add({.id = "E4alt",
       .description = "2 int_0^inf arctan(a x)/(1+x^2) dx = pi^2/3 - "
                      "log^2(1+a)/2 - Li2(1/(1+a)) - Li2(1-a)",
       .reference = "arctangent integral, tabulated dilogarithm form",
       .continuous_param = unit_alpha({0.0, 1.0}),
       .lhs = arctan_half_line,
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             const double l = std::log1p(a);
             return exact(kPi * kPi / 3.0 - 0.5 * l * l -
                          li(2, 1.0 / (1.0 + a), tol) - li(2, 1.0 - a, tol));
           },
       .default_tol = tol_default});

  auto skew_series = [](double a, const Tolerance& tol) {
    // sum_{n>=0} (log 2 - H_n^-) a^(2n+1)/(2n+1)
    return alternating_sum(
        [a](long n) {
          const double k = 2.0 * static_cast<double>(n) + 1.0;
          return skew_gap(n) * std::pow(a, k) / k;
        },
        0, tol);
  };

  add({.id = "E5",
       .description = "2 int_0^1 arctan(a x)/(1+x^2) dx = sum_{n>=0} "
                      "(log 2 - H_n^-) a^(2n+1)/(2n+1)",
       .reference = "arctangent integral over the unit interval",
       .continuous_param = unit_alpha({1.0}),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit([a](double x) {
                           return std::atan(a * x) / (1.0 + x * x);
                         }),
                         tol, 2.0);
           },
       .rhs =
           [skew_series](const ParamPoint& pt, const Tolerance& tol) {
             return skew_series(alpha_of(pt), tol);
           },
       .default_tol = tol_default});

  add({.id = "E6",
       .description = "pi^2/16 = sum_{n>=0} (log 2 - H_n^-)/(2n+1)",
       .reference = "skew-harmonic series for pi^2/16",
       .lhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(kPi * kPi / 16.0); },
       .rhs = [skew_series](const ParamPoint&,
                            const Tolerance& tol) { return skew_series(1.0, tol); },
       .default_tol = tol_default});

  add({.id = "E7",
       .description = "int_0^1 arctan^2(a x)/(1+x^2) dx = sum_{n>=1} (h_n/n) "
                      "(L_n - pi/4) a^(2n)",
       .reference = "squared arctangent integral",
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit([a](double x) {
                           const double t = std::atan(a * x);
                           return t * t / (1.0 + x * x);
                         }),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return alternating_sum(
                 [a](long n) {
                   return odd_h(n) / static_cast<double>(n) * leibniz_gap(n) *
                          std::pow(a, 2.0 * static_cast<double>(n));
                 },
                 1, tol);
           },
       .default_tol = tol_9});

  add({.id = "E8",
       .description = "pi^3 = 192 sum_{n>=1} (h_n/n)(L_n - pi/4)",
       .reference = "odd-harmonic series for pi^3",
       .lhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(kPi * kPi * kPi); },
       .rhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return from_sum(sum_pi_cubed_series(inner_tolerance(tol, 192.0)),
                             192.0);
           },
       .default_tol = tol_7});

  add({.id = "E9",
       .description = "int_0^inf log(1+a x)/(x(1+x)) dx = log a log(1-a) + "
                      "Li2(a); domain restricted to 0 < a <= 1",
       .reference = "log1p integral over the half-line",
       .continuous_param = unit_alpha(
           {}, {{1.0, [](const ParamPoint&) { return kZeta2; }}}),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::half_line(
                             [a](double x) {
                               if (x < kRemovableCutoff) return a;
                               return std::log1p(a * x) / (x * (1.0 + x));
                             },
                             EB::log_singular),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return exact(std::log(a) * std::log1p(-a) + li(2, a, tol));
           },
       .default_tol = tol_default});

  auto log_ratio_integral = [](double a, const Tolerance& tol) {
    return quad(IntegrandSpec::unit([a](double x) {
                  if (x < kRemovableCutoff) return a;
                  return std::log1p(a * x) / (x * (1.0 + x));
                }),
                tol);
  };

  add({.id = "E10",
       .description = "int_0^1 log(1+a x)/(x(1+x)) dx = Li2(1/2) - "
                      "Li2((1-a)/2)",
       .reference = "log1p integral over the unit interval",
       .continuous_param = unit_alpha({1.0}),
       .lhs =
           [log_ratio_integral](const ParamPoint& pt, const Tolerance& tol) {
             return log_ratio_integral(alpha_of(pt), tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return exact(li(2, 0.5, tol) - li(2, 0.5 * (1.0 - a), tol));
           },
       .default_tol = tol_default});

  const double li2_half = kPi * kPi / 12.0 - 0.5 * kLog2 * kLog2;

  add({.id = "E10b",
       .description = "int_0^1 log(1+x)/(x(1+x)) dx = pi^2/12 - log^2(2)/2",
       .reference = "log1p integral at a = 1",
       .lhs =
           [log_ratio_integral](const ParamPoint&, const Tolerance& tol) {
             return log_ratio_integral(1.0, tol);
           },
       .rhs = [li2_half](const ParamPoint&,
                         const Tolerance&) { return exact(li2_half); },
       .default_tol = tol_default});

  auto skew_power_series = [](double a, const Tolerance& tol) {
    // sum_{n>=0} (log 2 - H_n^-) a^(n+1)/(n+1)
    return alternating_sum(
        [a](long n) {
          const double k = static_cast<double>(n) + 1.0;
          return skew_gap(n) * std::pow(a, k) / k;
        },
        0, tol);
  };

  add({.id = "EC6",
       .description = "Li2(1/2) - Li2((1-a)/2) = sum_{n>=0} (log 2 - H_n^-) "
                      "a^(n+1)/(n+1)",
       .reference = "skew-harmonic dilogarithm series",
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return exact(li(2, 0.5, tol) - li(2, 0.5 * (1.0 - a), tol));
           },
       .rhs =
           [skew_power_series](const ParamPoint& pt, const Tolerance& tol) {
             return skew_power_series(alpha_of(pt), tol);
           },
       .default_tol = tol_default});

  add({.id = "EC6b",
       .description = "sum_{n>=0} (log 2 - H_n^-)/(n+1) = pi^2/12 - log^2(2)/2",
       .reference = "skew-harmonic dilogarithm series at a = 1",
       .lhs =
           [skew_power_series](const ParamPoint&, const Tolerance& tol) {
             return skew_power_series(1.0, tol);
           },
       .rhs = [li2_half](const ParamPoint&,
                         const Tolerance&) { return exact(li2_half); },
       .default_tol = tol_default});

  const IntegerDomain p_log{"p", {0, 1, 2, 3}};
  const ContinuousDomain beta_domain{"beta", 0.0, 1.0, {1.0}, {}};

  add({.id = "E11",
       .description = "int_0^1 (log x)^p log((1-bx)/(1+bx)) dx/x = "
                      "(-1)^(p+1) p! [Li_(p+2)(b) - Li_(p+2)(-b)]",
       .reference = "log-power integral, odd part",
       .integer_param = p_log,
       .continuous_param = beta_domain,
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double b = beta_of(pt);
             return quad(
                 IntegrandSpec::unit(
                     Fn([p, b](double x, double xc) {
                       const double g =
                           x < kRemovableCutoff
                               ? -2.0 * b
                               : (log_one_minus(b, x, xc) - std::log1p(b * x)) /
                                     x;
                       return std::pow(log_unit(x, xc), p) * g;
                     }),
                     EB::log_singular,
                     b == 1.0 ? EB::log_singular : EB::regular),
                 tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double b = beta_of(pt);
             const double sign = p % 2 == 0 ? -1.0 : 1.0;
             return exact(sign * std::tgamma(p + 1.0) *
                          (li(p + 2, b, tol) - li(p + 2, -b, tol)));
           },
       .default_tol = tol_9});

  add({.id = "E12",
       .description = "int_0^1 (log x)^p log(1-bx) dx/x = (-1)^(p+1) p! "
                      "Li_(p+2)(b)",
       .reference = "log-power integral",
       .integer_param = p_log,
       .continuous_param = beta_domain,
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double b = beta_of(pt);
             return quad(IntegrandSpec::unit(
                             Fn([p, b](double x, double xc) {
                               const double g =
                                   x < kRemovableCutoff
                                       ? -b
                                       : log_one_minus(b, x, xc) / x;
                               return std::pow(log_unit(x, xc), p) * g;
                             }),
                             EB::log_singular,
                             b == 1.0 ? EB::log_singular : EB::regular),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double sign = p % 2 == 0 ? -1.0 : 1.0;
             return exact(sign * std::tgamma(p + 1.0) *
                          li(p + 2, beta_of(pt), tol));
           },
       .default_tol = tol_9});

  add({.id = "E13",
       .description = "int_0^1 arctan(t) arctan(1/t) dt/t = (7/8) zeta(3)",
       .reference = "arctan(t) arctan(1/t) integral",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::unit([](double t) {
                           if (t < kRemovableCutoff) return kPi / 2.0;
                           return std::atan(t) * std::atan(1.0 / t) / t;
                         }),
                         tol);
           },
       .rhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(0.875 * kZeta3); },
       .default_tol = tol_default});

  add({.id = "E13inf",
       .description = "int_0^inf arctan(t) arctan(1/t) dt/t = (7/4) zeta(3)",
       .reference = "arctan(t) arctan(1/t) integral, half-line",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::half_line(Fn([](double t, double r) {
                           if (t < kRemovableCutoff) return kPi / 2.0;
                           return std::atan(t) * std::atan(r) / t;
                         })),
                         tol);
           },
       .rhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(1.75 * kZeta3); },
       .default_tol = tol_default});

  add({.id = "E14",
       .description = "int_0^1 log(1+t) log(1+1/t) dt/t = zeta(3)",
       .reference = "log(1+t) log(1+1/t) integral",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::unit(
                             [](double t) {
                               return std::log1p(t) / t * std::log1p(1.0 / t);
                             },
                             EB::log_singular, EB::regular),
                         tol);
           },
       .rhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(kZeta3); },
       .default_tol = tol_default});

  add({.id = "E14inf",
       .description = "int_0^inf log(1+t) log(1+1/t) dt/t = 2 zeta(3)",
       .reference = "log(1+t) log(1+1/t) integral, half-line",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::half_line(
                             Fn([](double t, double r) {
                               return std::log1p(t) / t * std::log1p(r);
                             }),
                             EB::log_singular),
                         tol);
           },
       .rhs = [](const ParamPoint&,
                 const Tolerance&) { return exact(2.0 * kZeta3); },
       .default_tol = tol_default});

  add({.id = "E15",
       .description = "int_0^1 arctan^2(t)/t dt = (pi/2) G - (7/8) zeta(3)",
       .reference = "squared arctangent over t",
       .lhs =
           [](const ParamPoint&, const Tolerance& tol) {
             return quad(IntegrandSpec::unit([](double t) {
                           if (t < kRemovableCutoff) return t;
                           const double a = std::atan(t);
                           return a * a / t;
                         }),
                         tol);
           },
       .rhs =
           [](const ParamPoint&, const Tolerance&) {
             return exact(kPi / 2.0 * kCatalan - 0.875 * kZeta3);
           },
       .default_tol = tol_default});

  auto alternating_odd_series = [](double a, const Tolerance& tol,
                                   double scale) {
    // sum_{n>=1} (-1)^(n-1) h_n a^(2n)/n^2
    return alternating_sum(
        [a](long n) {
          const double dn = static_cast<double>(n);
          return alt_sign(n) * odd_h(n) / (dn * dn) * std::pow(a, 2.0 * dn);
        },
        1, tol, scale);
  };

  add({.id = "E16",
       .description = "int_0^1 arctan^2(a x)/x dx = (1/2) sum_{n>=1} "
                      "(-1)^(n-1) h_n a^(2n)/n^2",
       .reference = "squared arctangent series",
       .continuous_param = unit_alpha({1.0}),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit([a](double x) {
                           if (x < kRemovableCutoff) return a * a * x;
                           const double t = std::atan(a * x);
                           return t * t / x;
                         }),
                         tol);
           },
       .rhs =
           [alternating_odd_series](const ParamPoint& pt,
                                    const Tolerance& tol) {
             return alternating_odd_series(alpha_of(pt), tol, 0.5);
           },
       .default_tol = tol_9});

  add({.id = "E17",
       .description = "sum_{n>=1} (-1)^(n-1) h_n/n^2 = pi G - (7/4) zeta(3)",
       .reference = "alternating odd-harmonic series at a = 1",
       .lhs =
           [alternating_odd_series](const ParamPoint&, const Tolerance& tol) {
             return alternating_odd_series(1.0, tol, 1.0);
           },
       .rhs =
           [](const ParamPoint&, const Tolerance&) {
             return exact(kPi * kCatalan - 1.75 * kZeta3);
           },
       .default_tol = tol_9});

  add({.id = "E18",
       .description = "sum_{n>=1} h_n a^(2n)/n^2 = Ramanujan's closed form in "
                      "Li2, Li3 of +-(1-a)/(1+a)",
       .reference = "Ramanujan odd-harmonic series",
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             // Successive term ratios are below a^2.
             return from_sum(sum_direct(
                 {[a](long n) {
                    const double dn = static_cast<double>(n);
                    return odd_h(n) / (dn * dn) * std::pow(a, 2.0 * dn);
                  },
                  1, SignPattern::positive},
                 tol, geometric_tail(a * a)));
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             return exact(ramanujan_rhs(alpha_of(pt), polylog_tolerance(tol)));
           },
       .default_tol = tol_default});

  add({.id = "E18d",
       .description = "Li2(u) - Li2(-u) = -log a log u - Li2(a) + Li2(-a) + "
                      "pi^2/4, u = (1-a)/(1+a)",
       .reference = "dilogarithm reflection for (1-a)/(1+a)",
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const double a = alpha_of(pt);
             const double u = (1.0 - a) / (1.0 + a);
             return exact(li(2, u, tol) - li(2, -u, tol));
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             return exact(
                 dilog_identity_rhs(alpha_of(pt), polylog_tolerance(tol)));
           },
       .default_tol = tol_default});

  add({.id = "E19",
       .description = "sum_{n>=1} (-1)^(n-1) h_n a^(2n)/n^2 = closed form in "
                      "Li3((1-ia)/(1+ia)), Li2(+-ia), arctan a",
       .reference = "alternating odd-harmonic series",
       .continuous_param = unit_alpha({1.0}),
       .lhs =
           [alternating_odd_series](const ParamPoint& pt,
                                    const Tolerance& tol) {
             return alternating_odd_series(alpha_of(pt), tol, 1.0);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const ComplexValue v = alternating_odd_harmonic_rhs(
                 alpha_of(pt), polylog_tolerance(tol));
             Evaluation e = exact(v.real());
             e.imag = v.imag();
             return e;
           },
       .default_tol = tol_9,
       .rhs_must_be_real = true});

  const IntegerDomain p_arctan{"p", {1, 2, 3, 4}};

  add({.id = "E21",
       .description = "int_0^1 arctan^p(a x)/x dx = sum_{n>=1} A(n,p) a^n/n",
       .reference = "arctangent power integral over x",
       .integer_param = p_arctan,
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit([p, a](double x) {
                           if (x < kRemovableCutoff) {
                             return p == 1 ? a : 0.0;
                           }
                           return std::pow(std::atan(a * x), p) / x;
                         }),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double a = alpha_of(pt);
             return alternating_sum(
                 [p, a](long m) {
                   const auto n = static_cast<unsigned>(p + 2 * m);
                   return arctan_power(n, static_cast<unsigned>(p)) *
                          std::pow(a, n) / n;
                 },
                 0, tol);
           },
       .default_tol = tol_8});

  add({.id = "E22",
       .description = "int_0^1 arctan^p(a x)/(1+x^2) dx = (1/2) sum_{n>=1} "
                      "A(n,p) beta((n+1)/2) a^n",
       .reference = "arctangent power integral over 1+x^2",
       .integer_param = p_arctan,
       .continuous_param = unit_alpha(),
       .lhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double a = alpha_of(pt);
             return quad(IntegrandSpec::unit([p, a](double x) {
                           return std::pow(std::atan(a * x), p) / (1.0 + x * x);
                         }),
                         tol);
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             return arctan_power_beta_sum(p_of(pt), alpha_of(pt), tol, 0.5);
           },
       .default_tol = tol_8});

  add({.id = "E23",
       .description = "pi^(p+1) = (p+1) 2^(2p+1) sum_{n>=1} A(n,p) "
                      "beta((n+1)/2)",
       .reference = "pi powers from arctangent coefficients",
       .integer_param = p_arctan,
       .lhs =
           [](const ParamPoint& pt, const Tolerance&) {
             return exact(std::pow(kPi, p_of(pt) + 1));
           },
       .rhs =
           [](const ParamPoint& pt, const Tolerance& tol) {
             const int p = p_of(pt);
             const double scale = (p + 1.0) * std::ldexp(1.0, 2 * p + 1);
             return arctan_power_beta_sum(p, 1.0, tol, scale);
           },
       .default_tol = tol_7});

  return cases;
}

}  // namespace

const std::vector<IdentityCase>& register_all() {
  static const std::vector<IdentityCase> registry = build_registry();
  return registry;
}

const IdentityCase* lookup(std::string_view id) {
  for (const auto& c : register_all()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

double param(const ParamPoint& point, std::string_view name) {
  for (const auto& p : point) {
    if (p.name == name) return p.value;
  }
  throw std::out_of_range("no parameter named " + std::string(name));
}

std::vector<ParamPoint> grid_points(const IdentityCase& c,
                                    std::size_t grid_size) {
  if (grid_size == 0) throw std::invalid_argument("grid_size must be >= 1");

  std::vector<double> continuous;
  if (c.continuous_param) {
    const auto& d = *c.continuous_param;
    for (std::size_t k = 1; k <= grid_size; ++k) {
      continuous.push_back(d.lo + (d.hi - d.lo) * static_cast<double>(k) /
                                      static_cast<double>(grid_size + 1));
    }
    continuous.insert(continuous.end(), d.endpoints.begin(),
                      d.endpoints.end());
    for (const auto& l : d.limits) continuous.push_back(l.at);
    std::sort(continuous.begin(), continuous.end());
    continuous.erase(std::unique(continuous.begin(), continuous.end()),
                     continuous.end());
  }

  std::vector<ParamPoint> points;
  auto with_continuous = [&](ParamPoint base) {
    if (!c.continuous_param) {
      points.push_back(std::move(base));
      return;
    }
    for (double v : continuous) {
      ParamPoint pt = base;
      pt.push_back({c.continuous_param->name, v});
      points.push_back(std::move(pt));
    }
  };
  if (c.integer_param) {
    for (int v : c.integer_param->values) {
      with_continuous({{c.integer_param->name, static_cast<double>(v)}});
    }
  } else {
    with_continuous({});
  }
  return points;
}

namespace {

const LimitValue* limit_at(const IdentityCase& c, const ParamPoint& point) {
  if (!c.continuous_param) return nullptr;
  const double v = param(point, c.continuous_param->name);
  for (const auto& l : c.continuous_param->limits) {
    if (l.at == v) return &l;
  }
  return nullptr;
}

}  // namespace

VerificationOutcome evaluate_point(const IdentityCase& c,
                                   const ParamPoint& point,
                                   const Tolerance& tol) {
  VerificationOutcome out;
  out.id = c.id;
  out.params = point;
  const Tolerance engine = tol.scaled(0.1);
  try {
    const Evaluation lhs = c.lhs(point, engine);
    Evaluation rhs;
    if (const LimitValue* l = limit_at(c, point)) {
      rhs = exact(l->value(point));
    } else {
      rhs = c.rhs(point, engine);
    }
    out.lhs = lhs.value;
    out.rhs = rhs.value;
    out.work = {lhs.evals + rhs.evals, lhs.terms + rhs.terms};
    out.abs_error = std::abs(lhs.value - rhs.value);
    const double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
    out.rel_error = scale > 0.0 ? out.abs_error / scale : out.abs_error;
    out.pass = tol.pass(lhs.value, rhs.value);
    if (!out.pass) {
      out.reason = lhs.converged && rhs.converged ? kReasonTolerance
                                                  : kReasonNotConverged;
    } else if (c.rhs_must_be_real &&
               !(std::abs(rhs.imag) <= tol.budget(rhs.value))) {
      out.pass = false;
      out.reason = kReasonImaginary;
    }
  } catch (const NotConverged&) {
    out.pass = false;
    out.reason = kReasonNotConverged;
  } catch (const std::exception& e) {
    out.pass = false;
    out.reason = std::string(kReasonError) + ": " + e.what();
  }
  if (!std::isfinite(out.lhs) || !std::isfinite(out.rhs)) {
    if (out.pass) {
      out.pass = false;
      out.reason = std::string(kReasonError) + ": non-finite value";
    }
  }
  return out;
}

namespace {

struct Job {
  const IdentityCase* c;
  ParamPoint point;
  Tolerance tol;
};

std::vector<VerificationOutcome> run_jobs(const std::vector<Job>& jobs,
                                          unsigned threads) {
  std::vector<VerificationOutcome> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = evaluate_point(*jobs[i].c, jobs[i].point, jobs[i].tol);
    }
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return out;
}

void append_jobs(std::vector<Job>& jobs, const IdentityCase& c,
                 std::size_t grid_size, const std::optional<Tolerance>& tol,
                 std::optional<std::size_t> max_work = std::nullopt) {
  Tolerance t = tol.value_or(c.default_tol);
  if (max_work) t = t.with_max_work(*max_work);
  for (auto& pt : grid_points(c, grid_size)) {
    jobs.push_back({&c, std::move(pt), t});
  }
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<VerificationOutcome> verify(std::string_view id,
                                        std::size_t grid_size,
                                        const std::optional<Tolerance>& tol,
                                        unsigned threads) {
  const IdentityCase* c = lookup(id);
  if (c == nullptr) {
    throw std::out_of_range("unknown identity id: " + std::string(id));
  }
  std::vector<Job> jobs;
  append_jobs(jobs, *c, grid_size, tol);
  return run_jobs(jobs, threads);
}

Report verify_all(std::size_t grid_size, const std::optional<Tolerance>& tol,
                  unsigned threads, const std::vector<std::string>& ids,
                  std::optional<std::size_t> max_work) {
  std::vector<Job> jobs;
  if (ids.empty()) {
    for (const auto& c : register_all()) {
      append_jobs(jobs, c, grid_size, tol, max_work);
    }
  } else {
    for (const auto& c : register_all()) {
      if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) {
        append_jobs(jobs, c, grid_size, tol, max_work);
      }
    }
    for (const auto& id : ids) {
      if (lookup(id) == nullptr) {
        throw std::out_of_range("unknown identity id: " + id);
      }
    }
  }

  Report r;
  r.version = std::string(kToolVersion);
  r.timestamp = utc_timestamp();
  if (tol) {
    r.tol_abs = tol->abs_tol();
    r.tol_rel = tol->rel_tol();
  }
  r.outcomes = run_jobs(jobs, threads);
  r.summary = summarize(r.outcomes);
  return r;
}

ReportSummary summarize(const std::vector<VerificationOutcome>& outcomes) {
  ReportSummary s;
  for (const auto& o : outcomes) {
    if (o.pass) {
      ++s.passed;
    } else {
      ++s.failed;
      if (o.reason == kReasonNotConverged) ++s.not_converged;
    }
  }
  return s;
}

std::vector<LimitContinuity> limit_continuity(double distance) {
  if (!(distance > 0.0)) {
    throw std::invalid_argument("limit_continuity: distance must be positive");
  }
  const Tolerance tol = specfun_default_tolerance();
  std::vector<LimitContinuity> out;
  for (const auto& c : register_all()) {
    if (!c.continuous_param) continue;
    const auto& d = *c.continuous_param;
    std::vector<double> ints = {0.0};
    if (c.integer_param) {
      ints.assign(c.integer_param->values.begin(),
                  c.integer_param->values.end());
    }
    for (const auto& l : d.limits) {
      for (double iv : ints) {
        ParamPoint at;
        if (c.integer_param) at.push_back({c.integer_param->name, iv});
        ParamPoint near = at;
        at.push_back({d.name, l.at});
        const double inside = l.at <= d.lo ? l.at + distance : l.at - distance;
        near.push_back({d.name, inside});
        LimitContinuity lc;
        lc.id = c.id;
        lc.limit_point = at;
        lc.registered = l.value(at);
        lc.nearby = c.rhs(near, tol).value;
        lc.difference = std::abs(lc.nearby - lc.registered);
        out.push_back(std::move(lc));
      }
    }
  }
  return out;
}

}  // namespace basel
