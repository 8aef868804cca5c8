// Acceptance suite: one line per criterion, exit status 0 only when all pass.
//
// usage: basel_acceptance [path-to-basel-verify]
// Without the CLI path the determinism check renders reports in-process.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "basel/combinatorics.hpp"
#include "basel/identities.hpp"
#include "basel/quadrature.hpp"
#include "basel/report.hpp"
#include "basel/series.hpp"
#include "basel/specfun.hpp"

using basel::ParamPoint;
using basel::Tolerance;
using basel::constants;

namespace {

constexpr double kPi = constants.pi;

struct Verdict {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

ParamPoint point(std::initializer_list<basel::Param> ps) { return ps; }

// Evaluates one case at one point under an explicit comparison tolerance.
// The reason text is appended on failure.
basel::VerificationOutcome check_point(Verdict& v, std::string_view id,
                                       const ParamPoint& pt, double tol) {
  const auto* c = basel::lookup(id);
  const auto o = basel::evaluate_point(*c, pt, Tolerance(tol, tol));
  std::string where(id);
  for (const auto& p : pt) where += " " + p.name + "=" + fmt(p.value);
  v.require(o.pass && o.abs_error <= tol,
            where + " err " + fmt(o.abs_error) + " " + o.reason);
  return o;
}

double alpha_grid(int k) { return 0.1 * k; }

Verdict criterion_1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto e1 = check_point(v, "E1", {}, 1e-10);
  v.require(std::abs(e1.lhs - constants.zeta2) <= 1e-10, "E1 vs pi^2/6");
  // The endpoint value of the half-line arctangent integral is
  // Li2(1) - Li2(-1) = (3/2) zeta(2).
  const auto* e4 = basel::lookup("E4");
  const double endpoint =
      e4->lhs(point({{"alpha", 1.0}}), Tolerance(1e-12, 1e-12)).value;
  const double zeta2 = endpoint * 2.0 / 3.0;
  v.require(std::abs(zeta2 - constants.zeta2) <= 1e-10, "E4(1) vs pi^2/6");
  const double s = seconds_since(t0);
  v.require(s < 1.0, "runtime");
  v.notes << " E1 err " << fmt(std::abs(e1.lhs - constants.zeta2))
          << ", E4(1)*2/3 err " << fmt(std::abs(zeta2 - constants.zeta2))
          << ", " << fmt(s) << " s";
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto o = check_point(v, "E15", {}, 1e-10);
  const double target = kPi / 2 * constants.catalan - 0.875 * constants.zeta3;
  v.require(std::abs(o.lhs - target) <= 1e-10, "E15 vs constants");
  const double s = seconds_since(t0);
  v.require(s < 1.0, "runtime");
  v.notes << " err " << fmt(std::abs(o.lhs - target)) << ", " << fmt(s) << " s";
  return v;
}

Verdict criterion_3() {
  Verdict v;
  const auto e13 = check_point(v, "E13", {}, 1e-10);
  const auto e14 = check_point(v, "E14", {}, 1e-10);
  const auto e13inf = check_point(v, "E13inf", {}, 1e-10);
  const auto e14inf = check_point(v, "E14inf", {}, 1e-10);
  const double d13 = std::abs(e13inf.lhs - 2 * e13.lhs);
  const double d14 = std::abs(e14inf.lhs - 2 * e14.lhs);
  v.require(d13 <= 1e-10, "E13inf = 2 E13");
  v.require(d14 <= 1e-10, "E14inf = 2 E14");
  v.notes << " E13 err " << fmt(e13.abs_error) << ", E14 err "
          << fmt(e14.abs_error) << ", split diffs " << fmt(d13) << ", "
          << fmt(d14);
  return v;
}

Verdict criterion_4() {
  Verdict v;
  double worst = 0.0;
  const Tolerance engine(1e-12, 1e-12);
  for (int k = 1; k <= 9; ++k) {
    const auto pt = point({{"alpha", alpha_grid(k)}});
    const auto a = check_point(v, "E4", pt, 1e-10);
    const auto b = check_point(v, "E4alt", pt, 1e-10);
    const double cross = std::abs(a.rhs - b.rhs);
    v.require(cross <= 1e-10, "E4 vs E4alt closed forms");
    worst = std::max({worst, a.abs_error, b.abs_error, cross});
  }
  for (double at : {0.0, 1.0}) {
    const auto o = check_point(v, "E4", point({{"alpha", at}}), 1e-10);
    worst = std::max(worst, o.abs_error);
  }
  v.notes << " worst " << fmt(worst) << " over alpha = 0.1..0.9 and limits {0, 1}";
  return v;
}

Verdict criterion_5() {
  Verdict v;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75, 1.0}) {
    worst = std::max(worst, check_point(v, "E5", point({{"alpha", a}}), 1e-10).abs_error);
  }
  const auto r = basel::sum_alternating_accelerated(
      {[](long n) {
         return (constants.log2 - basel::skew_harmonic_value(static_cast<unsigned>(n))) /
                (2.0 * n + 1.0);
       },
       0, basel::SignPattern::alternating},
      Tolerance(1e-11, 1e-11, 100'000));
  const double err = std::abs(r.value - kPi * kPi / 16);
  v.require(r.converged && err <= 1e-10 && r.terms_used <= 100'000, "E6 accelerated");
  v.notes << " E5 worst " << fmt(worst) << ", E6 err " << fmt(err) << " with "
          << r.terms_used << " terms";
  return v;
}

Verdict criterion_6() {
  Verdict v;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    worst = std::max(worst, check_point(v, "E7", point({{"alpha", a}}), 1e-9).abs_error);
  }
  const double pi3 = kPi * kPi * kPi;
  const auto r = basel::sum_pi_cubed_series(Tolerance(1e-7 / 192 / 10, 0.0, 200'000));
  const double err = std::abs(192 * r.value - pi3);
  v.notes << " E7 worst " << fmt(worst) << ", |192 S - pi^3| = " << fmt(err)
          << " with " << r.terms_used << " terms";
  if (err <= 1e-7 && r.terms_used <= 200'000) {
    v.notes << " (1e-7 branch)";
    return v;
  }
  // Fallback branch: error falls with averaging depth and ends below 1e-5.
  std::vector<double> partial;
  double s = 0.0;
  for (long n = 1; n <= 64; ++n) {
    s += basel::pi_cubed_series_term(n);
    partial.push_back(192 * s);
  }
  const auto diag = basel::euler_anti_diagonal(partial);
  bool monotone = true;
  for (std::size_t k = 1; k < diag.size() && std::abs(diag[k - 1] - pi3) > 1e-12; ++k) {
    monotone = monotone && std::abs(diag[k] - pi3) < std::abs(diag[k - 1] - pi3);
  }
  v.require(monotone && err <= 1e-5, "E8 fallback branch");
  v.notes << " (fallback branch)";
  return v;
}

Verdict criterion_7() {
  Verdict v;
  double worst = 0.0;
  for (const char* id : {"E9", "E10", "EC6"}) {
    for (int k = 1; k <= 9; ++k) {
      worst = std::max(
          worst, check_point(v, id, point({{"alpha", alpha_grid(k)}}), 1e-10).abs_error);
    }
  }
  worst = std::max(worst, check_point(v, "E9", point({{"alpha", 1.0}}), 1e-10).abs_error);
  worst = std::max(worst, check_point(v, "E10", point({{"alpha", 1.0}}), 1e-10).abs_error);
  worst = std::max(worst, check_point(v, "E10b", {}, 1e-10).abs_error);
  worst = std::max(worst, check_point(v, "EC6b", {}, 1e-10).abs_error);
  const double li2_half = basel::polylog_real(2, 0.5);
  const double closed = kPi * kPi / 12 - 0.5 * constants.log2 * constants.log2;
  v.require(std::abs(li2_half - closed) <= 1e-10, "Li2(1/2)");
  v.notes << " worst " << fmt(worst) << ", Li2(1/2) err " << fmt(std::abs(li2_half - closed));
  return v;
}

Verdict criterion_8() {
  Verdict v;
  double worst = 0.0;
  for (const char* id : {"E11", "E12"}) {
    for (int p = 0; p <= 3; ++p) {
      for (double b : {0.3, 0.7, 1.0}) {
        worst = std::max(worst,
                         check_point(v, id, point({{"p", double(p)}, {"beta", b}}), 1e-9)
                             .abs_error);
      }
    }
  }
  v.notes << " worst " << fmt(worst) << " over 24 points";
  return v;
}

Verdict criterion_9() {
  Verdict v;
  double worst = 0.0;
  for (double a : {0.3, 0.6, 0.9, 1.0}) {
    worst = std::max(worst, check_point(v, "E16", point({{"alpha", a}}), 1e-9).abs_error);
  }
  const auto e17 = check_point(v, "E17", {}, 1e-9);
  v.require(std::abs(e17.lhs - (kPi * constants.catalan - 1.75 * constants.zeta3)) <= 1e-9,
            "E17 target");
  for (int k = 1; k <= 9; ++k) {
    const auto pt = point({{"alpha", alpha_grid(k)}});
    worst = std::max(worst, check_point(v, "E18", pt, 1e-10).abs_error);
    worst = std::max(worst, check_point(v, "E18d", pt, 1e-10).abs_error);
  }
  double worst_imag = 0.0;
  for (double a : {0.2, 0.5, 0.8, 1.0}) {
    worst = std::max(worst, check_point(v, "E19", point({{"alpha", a}}), 1e-9).abs_error);
    const double im = std::abs(basel::alternating_odd_harmonic_rhs(a).imag());
    v.require(im <= 1e-9, "E19 imaginary part");
    worst_imag = std::max(worst_imag, im);
  }
  v.notes << " worst " << fmt(worst) << ", E17 err " << fmt(e17.abs_error)
          << ", max |Im| " << fmt(worst_imag);
  return v;
}

Verdict criterion_10() {
  Verdict v;
  const auto base = basel::arctan_series(30);
  for (unsigned p = 1; p <= 4; ++p) {
    const auto power = basel::series_pow(base, p);
    for (unsigned n = 1; n <= 30; ++n) {
      v.require(basel::arctan_power_coeff(n, p) == power[n],
                "A(" + std::to_string(n) + "," + std::to_string(p) + ")");
    }
  }
  double worst = 0.0;
  for (const char* id : {"E21", "E22"}) {
    for (int p = 1; p <= 4; ++p) {
      for (double a : {0.5, 0.8}) {
        worst = std::max(
            worst,
            check_point(v, id, point({{"p", double(p)}, {"alpha", a}}), 1e-8).abs_error);
      }
    }
  }
  const auto* e23 = basel::lookup("E23");
  double worst23 = 0.0;
  for (int p = 1; p <= 4; ++p) {
    const auto o = basel::evaluate_point(*e23, point({{"p", double(p)}}), e23->default_tol);
    v.require(o.abs_error <= 1e-6, "E23 p=" + std::to_string(p));
    worst23 = std::max(worst23, o.abs_error);
  }
  const Tolerance tight(1e-14, 1e-14);
  const double pi2_e23 = e23->rhs(point({{"p", 1.0}}), tight).value;
  const double pi2_e6 = 16 * basel::lookup("E6")->rhs({}, tight).value;
  const double chain = std::abs(pi2_e23 - pi2_e6);
  v.require(chain <= 1e-12, "E23(p=1) vs 16 E6");
  v.notes << " A(n,p) exact for n <= 30, E21/E22 worst " << fmt(worst)
          << ", E23 worst " << fmt(worst23) << ", E23(1) vs E6 " << fmt(chain);
  return v;
}

Verdict criterion_11() {
  Verdict v;
  // Combinatorial identities
  for (unsigned n = 1; n <= 40; ++n) {
    v.require(basel::skew_harmonic(n) - basel::skew_harmonic(n - 1) ==
                  basel::BigRational(basel::BigInt(n % 2 ? 1 : -1), basel::BigInt(n)),
              "skew harmonic step");
    v.require(basel::odd_harmonic(n) ==
                  basel::harmonic(2 * n) - basel::harmonic(n) * basel::BigRational(
                                                basel::BigInt(1), basel::BigInt(2)),
              "odd harmonic");
  }
  for (unsigned k = 2; k <= 20; ++k) {
    basel::BigInt sum = 0;
    for (unsigned p = 0; p <= k; ++p) sum += basel::stirling_first(k, p);
    v.require(sum == 0, "Stirling row sum");
  }
  for (unsigned n = 1; n < 20; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const basel::BigInt prev = k >= 2 ? basel::lah(n, k - 1) : basel::BigInt(0);
      v.require(basel::lah(n + 1, k) == prev + (n + k) * basel::lah(n, k), "Lah recurrence");
    }
  }
  const auto base = basel::arctan_series(30);
  for (unsigned p = 5; p <= 6; ++p) {
    const auto power = basel::series_pow(base, p);
    for (unsigned n = p; n <= 30; ++n) {
      v.require(basel::arctan_power_coeff(n, p) == power[n], "A(n,p) oracle");
    }
  }
  // Incomplete beta recurrences
  double beta_worst = 0.0;
  for (double z = 0.5; z <= 25.0; z += 0.5) {
    beta_worst = std::max(beta_worst, std::abs(basel::incomplete_beta(z) +
                                               basel::incomplete_beta(z + 1) - 1 / z));
  }
  v.require(beta_worst <= 1e-13, "beta recurrence");
  // Polylog duplication and derivative
  double dup_worst = 0.0;
  for (int p : {2, 3}) {
    for (double x = -1.0; x <= 1.0 + 1e-9; x += 0.25) {
      dup_worst = std::max(
          dup_worst, std::abs(basel::polylog_real(p, x) + basel::polylog_real(p, -x) -
                              std::ldexp(basel::polylog_real(p, x * x), 1 - p)));
    }
  }
  v.require(dup_worst <= 1e-11, "polylog duplication");
  double der_worst = 0.0;
  for (double x : {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}) {
    const double h = 1e-5;
    const double d = (basel::polylog_real(3, x + h) - basel::polylog_real(3, x - h)) / (2 * h);
    der_worst = std::max(der_worst, std::abs(x * d - basel::polylog_real(2, x)));
  }
  v.require(der_worst <= 1e-6, "polylog derivative");
  // Quadrature honesty on a reduced suite
  using basel::IntegrandSpec;
  using EB = basel::EndpointBehavior;
  const std::vector<std::pair<IntegrandSpec, double>> suite = {
      {IntegrandSpec::unit([](double x) { return std::exp(x); }), std::exp(1.0) - 1},
      {IntegrandSpec::unit([](double x) { return std::log(x); }, EB::log_singular), -1.0},
      {IntegrandSpec::unit([](double x) { return 1 / std::sqrt(x); },
                           EB::inverse_sqrt_singular),
       2.0},
      {IntegrandSpec::unit([](double x) { return x < 1e-12 ? 1.0 : std::atan(x) / x; }),
       constants.catalan},
      {IntegrandSpec::half_line([](double x) { return 1 / (1 + x * x); }), kPi / 2},
  };
  int honest = 0;
  for (const auto& [spec, truth] : suite) {
    const auto r = basel::integrate(spec, Tolerance(1e-12, 1e-12));
    if (std::abs(r.value - truth) <= 5 * r.error_estimate) ++honest;
  }
  v.require(honest == static_cast<int>(suite.size()), "quadrature honesty");
  // Registered limit values against the general formula 1e-4 inside
  for (const auto& lc : basel::limit_continuity(1e-4)) {
    std::string where = lc.id + "@" + fmt(lc.limit_point.back().value);
    v.notes << " " << where << " diff " << fmt(lc.difference) << ";";
    v.require(lc.difference <= 1e-3, "limit continuity " + where);
  }
  v.notes << " beta " << fmt(beta_worst) << ", dup " << fmt(dup_worst) << ", deriv "
          << fmt(der_worst) << ", honesty " << honest << "/" << suite.size();
  return v;
}

std::string run_command(const std::string& cmd, int& status) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Verdict criterion_12(const std::string& cli) {
  Verdict v;
  std::string first;
  std::string second;
  if (!cli.empty()) {
    int s1 = 0;
    int s2 = 0;
    first = run_command("'" + cli + "' verify --format json", s1);
    second = run_command("'" + cli + "' verify --format json --threads 1", s2);
    v.require(s1 == 0 && s2 == 0, "CLI exit status");
    v.notes << " via CLI,";
  } else {
    first = basel::render_report(basel::verify_all(5), basel::ReportFormat::json);
    second = basel::render_report(basel::verify_all(5, std::nullopt, 1),
                                  basel::ReportFormat::json);
    v.notes << " in-process,";
  }
  const std::regex stamp("\"timestamp\":\"[^\"]*\"");
  const std::string a = std::regex_replace(first, stamp, "\"timestamp\":\"\"");
  const std::string b = std::regex_replace(second, stamp, "\"timestamp\":\"\"");
  v.require(!a.empty() && a == b, "reports differ beyond the timestamp");
  v.notes << " " << first.size() << " bytes, identical modulo timestamp: "
          << (a == b ? "yes" : "no");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"basel closed forms (E1, E4 endpoint)", criterion_1},
      {"E15 three constants", criterion_2},
      {"E13/E14 and half-line doubles", criterion_3},
      {"E4 and E4alt over alpha grid and limits", criterion_4},
      {"E5 series vs quadrature, accelerated E6", criterion_5},
      {"E7 series vs quadrature, E8 pi^3", criterion_6},
      {"E9/E10/EC6 and Li2(1/2)", criterion_7},
      {"E11/E12 log-power integrals", criterion_8},
      {"E16-E19 odd harmonic series", criterion_9},
      {"E21-E23 arctangent powers", criterion_10},
      {"property suites and limit continuity", criterion_11},
      {"determinism of JSON reports", [&cli] { return criterion_12(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes << " [exception: " << e.what() << "]";
    }
    if (!v.pass) ++failed;
    std::printf("%-4s criterion %2zu: %s:%s\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, v.notes.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
