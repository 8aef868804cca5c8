#include <doctest.h>

#include <cmath>
#include <complex>

#include "basel/combinatorics.hpp"
#include "basel/specfun.hpp"

using basel::ComplexValue;
using basel::constants;

namespace {

constexpr double kPi = constants.pi;

// sum_{n>=1} h_n x^n / n^2 with signs (-1)^(n-1) when `alternating`, summed
// until the terms vanish in double.
double odd_harmonic_series(double x, bool alternating) {
  double sum = 0.0;
  double h = 0.0;
  double power = 1.0;
  for (int n = 1; n < 2000; ++n) {
    h += 1.0 / (2 * n - 1);
    power *= x;
    const double t = h * power / (double(n) * n);
    sum += alternating && n % 2 == 0 ? -t : t;
    if (t < 1e-20) break;
  }
  return sum;
}

double li2_series(double x) {
  double sum = 0.0;
  double power = 1.0;
  for (int n = 1; n < 200; ++n) {
    power *= x;
    sum += power / (double(n) * n);
  }
  return sum;
}

}  // namespace

TEST_CASE("real polylog examples") {
  CHECK(basel::polylog_real(2, 1.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(basel::polylog_real(2, 0.0) == 0.0);
  CHECK(basel::polylog_real(2, -1.0) ==
        doctest::Approx(-kPi * kPi / 12).epsilon(1e-15));
  CHECK(basel::polylog_real(3, -1.0) ==
        doctest::Approx(-0.75 * constants.zeta3).epsilon(1e-15));
  const double ln2 = constants.log2;
  CHECK(std::abs(basel::polylog_real(2, 0.5) - (kPi * kPi / 12 - ln2 * ln2 / 2)) <=
        1e-14);
  CHECK(basel::polylog_real(1, 0.75) == doctest::Approx(std::log(4.0)));
}

TEST_CASE("real polylog errors") {
  CHECK_THROWS_AS(basel::polylog_real(2, 1.5), std::domain_error);
  CHECK_THROWS_AS(basel::polylog_real(0, 0.5), std::domain_error);
  CHECK_THROWS_AS(basel::polylog_real(1, 1.0), basel::PoleError);
  CHECK_THROWS_AS(basel::polylog_complex(2, {0.9, 0.9}), std::domain_error);
}

TEST_CASE("polylog integral path agrees with the defining series") {
  for (double x : {0.55, 0.7, -0.6, -0.8}) {
    CHECK(std::abs(basel::polylog_real(2, x) - li2_series(x)) <= 1e-14);
  }
}

TEST_CASE("polylog duplication formula") {
  for (int p : {2, 3}) {
    for (double x = -1.0; x <= 1.0 + 1e-9; x += 0.125) {
      const double lhs = basel::polylog_real(p, x) + basel::polylog_real(p, -x);
      const double rhs = std::ldexp(basel::polylog_real(p, x * x), 1 - p);
      CAPTURE(x);
      CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
  }
}

TEST_CASE("polylog derivative relation") {
  const double h = 1e-5;
  for (int p = 2; p <= 5; ++p) {
    for (double x : {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}) {
      const double d = (basel::polylog_real(p, x + h) -
                        basel::polylog_real(p, x - h)) /
                       (2 * h);
      CHECK(std::abs(x * d - basel::polylog_real(p - 1, x)) <= 1e-6);
    }
  }
}

TEST_CASE("complex polylog") {
  const ComplexValue li2_i = basel::polylog_complex(2, {0.0, 1.0});
  CHECK(std::abs(li2_i.real() + kPi * kPi / 48) <= 1e-13);
  CHECK(std::abs(li2_i.imag() - constants.catalan) <= 1e-13);
  CHECK(basel::polylog_complex(3, {1.0, 0.0}).real() == constants.zeta3);

  for (double x : {-1.0, -0.7, -0.3, 0.0, 0.4, 0.9, 1.0}) {
    for (int p : {2, 3}) {
      const ComplexValue c = basel::polylog_complex(p, {x, 0.0});
      CHECK(std::abs(c.real() - basel::polylog_real(p, x)) <= 1e-12);
      CHECK(c.imag() == 0.0);
    }
  }

  for (double theta : {0.3, 1.1, 2.0, 2.9}) {
    const ComplexValue z = std::polar(1.0, theta);
    for (int p : {2, 3}) {
      const ComplexValue a = basel::polylog_complex(p, z);
      const ComplexValue b = basel::polylog_complex(p, std::conj(z));
      CHECK(a.real() == b.real());
      CHECK(a.imag() == -b.imag());
    }
  }

  // Li_1 on the circle: -log(1 - z), principal branch
  const ComplexValue z = std::polar(1.0, 2.0);
  const ComplexValue l1 = basel::polylog_complex(1, z);
  CHECK(std::abs(l1 + std::log(1.0 - z)) <= 1e-15);
}

TEST_CASE("complex polylog against its power series inside the disc") {
  const ComplexValue z{0.45, -0.55};
  ComplexValue sum{};
  ComplexValue power{1.0, 0.0};
  for (int n = 1; n < 400; ++n) {
    power *= z;
    sum += power / (double(n) * n * n);
  }
  const ComplexValue li3 = basel::polylog_complex(3, z);
  CHECK(std::abs(li3.real() - sum.real()) <= 1e-11);
  CHECK(std::abs(li3.imag() - sum.imag()) <= 1e-11);
}

TEST_CASE("incomplete beta examples and errors") {
  const double ln2 = constants.log2;
  CHECK(std::abs(basel::incomplete_beta(1.0) - ln2) <= 1e-13);
  CHECK(std::abs(basel::incomplete_beta(0.5) - kPi / 2) <= 1e-13);
  CHECK(std::abs(basel::incomplete_beta(3.0) - (ln2 - 0.5)) <= 1e-13);
  CHECK_THROWS_AS(basel::incomplete_beta(0.0), std::domain_error);
  CHECK_THROWS_AS(basel::incomplete_beta(-1.0), std::domain_error);
}

TEST_CASE("incomplete beta recurrence and closed values") {
  for (double z = 0.5; z <= 25.0; z += 0.5) {
    CHECK(std::abs(basel::incomplete_beta(z) + basel::incomplete_beta(z + 1) -
                   1 / z) <= 1e-13);
  }
  const double ln2 = constants.log2;
  for (unsigned n = 0; n <= 50; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(basel::incomplete_beta(n + 1.0) -
                   sign * (ln2 - basel::skew_harmonic_value(n))) <= 1e-13);
    CHECK(std::abs(0.5 * basel::incomplete_beta(n + 0.5) -
                   sign * (kPi / 4 - basel::leibniz_partial_value(n))) <= 1e-13);
  }
}

TEST_CASE("Ramanujan closed form against its series") {
  for (double a : {0.1, 0.3, 0.5, 0.7}) {
    CHECK(std::abs(basel::ramanujan_rhs(a) - odd_harmonic_series(a * a, false)) <=
          1e-12);
  }
  CHECK_THROWS_AS(basel::ramanujan_rhs(0.0), std::domain_error);
  CHECK_THROWS_AS(basel::ramanujan_rhs(1.0), std::domain_error);
}

TEST_CASE("alternating odd harmonic closed form") {
  const ComplexValue at1 = basel::alternating_odd_harmonic_rhs(1.0);
  CHECK(std::abs(at1.real() - (kPi * constants.catalan - 1.75 * constants.zeta3)) <=
        1e-12);
  CHECK(std::abs(at1.imag()) <= 1e-10);

  for (double a : {0.2, 0.5, 0.8}) {
    const ComplexValue v = basel::alternating_odd_harmonic_rhs(a);
    CHECK(std::abs(v.real() - odd_harmonic_series(a * a, true)) <= 1e-12);
    CHECK(std::abs(v.imag()) <= 1e-10);
  }
  CHECK_THROWS_AS(basel::alternating_odd_harmonic_rhs(0.0), std::domain_error);
  CHECK_THROWS_AS(basel::alternating_odd_harmonic_rhs(1.2), std::domain_error);
}

TEST_CASE("dilogarithm identity") {
  CHECK(std::abs(basel::dilog_identity_rhs(0.5) -
                 (li2_series(1.0 / 3) - li2_series(-1.0 / 3))) <= 1e-13);
  CHECK(std::abs(basel::dilog_identity_rhs(0.9) -
                 (li2_series(1.0 / 19) - li2_series(-1.0 / 19))) <= 1e-13);
  CHECK(std::abs(basel::dilog_identity_rhs(1.0 - 1e-9)) <= 1e-6);
  CHECK_THROWS_AS(basel::dilog_identity_rhs(1.0), std::domain_error);
}
