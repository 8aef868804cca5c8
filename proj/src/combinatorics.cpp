#include "basel/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace basel {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

// --- power series ----------------------------------------------------------

RationalPowerSeries::RationalPowerSeries(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("power series needs at least one coefficient");
  }
}

RationalPowerSeries operator*(const RationalPowerSeries& f,
                              const RationalPowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<BigRational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return RationalPowerSeries(std::move(out));
}

RationalPowerSeries series_pow(const RationalPowerSeries& base, unsigned p) {
  if (p == 0) throw std::invalid_argument("series_pow: p must be >= 1");
  RationalPowerSeries result = base;
  for (unsigned i = 1; i < p; ++i) result = result * base;
  return result;
}

RationalPowerSeries arctan_series(std::size_t order) {
  if (order == 0) throw std::invalid_argument("arctan_series: order >= 1");
  std::vector<BigRational> c(order + 1);
  for (std::size_t d = 1; d <= order; d += 2) {
    const long m = static_cast<long>((d + 1) / 2);
    c[d] = BigRational(BigInt(m % 2 == 1 ? 1 : -1), BigInt(2 * m - 1));
  }
  return RationalPowerSeries(std::move(c));
}

// --- harmonic-type numbers -------------------------------------------------

namespace {

BigRational unit_fraction(long sign, unsigned long den) {
  return BigRational(BigInt(sign), BigInt(den));
}

long alt_sign(unsigned k) { return k % 2 == 1 ? 1 : -1; }  // (-1)^(k-1)

// k-th increment of each sequence, k >= 1.
BigRational harmonic_step(unsigned k) { return unit_fraction(1, k); }
BigRational skew_step(unsigned k) { return unit_fraction(alt_sign(k), k); }
BigRational odd_step(unsigned k) { return unit_fraction(1, 2ul * k - 1); }
BigRational leibniz_step(unsigned k) {
  return unit_fraction(alt_sign(k), 2ul * k - 1);
}

template <typename Step>
BigRational partial_sum(unsigned n, Step step) {
  BigRational acc;
  for (unsigned k = 1; k <= n; ++k) acc += step(k);
  return acc;
}

/// Grows an exact running sum on demand and publishes its double images.
class SequenceCache {
 public:
  explicit SequenceCache(BigRational (*step)(unsigned)) : step_(step) {
    values_.push_back(0.0);
  }

  double at(unsigned n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      exact_ += step_(static_cast<unsigned>(values_.size()));
      values_.push_back(exact_.to_double());
    }
    return values_[n];
  }

 private:
  BigRational (*step_)(unsigned);
  std::mutex mutex_;
  BigRational exact_;
  std::vector<double> values_;
};

}  // namespace

BigRational harmonic(unsigned n) { return partial_sum(n, harmonic_step); }
BigRational skew_harmonic(unsigned n) { return partial_sum(n, skew_step); }
BigRational odd_harmonic(unsigned n) { return partial_sum(n, odd_step); }
BigRational leibniz_partial(unsigned n) { return partial_sum(n, leibniz_step); }

double skew_harmonic_value(unsigned n) {
  static SequenceCache cache(skew_step);
  return cache.at(n);
}

double odd_harmonic_value(unsigned n) {
  static SequenceCache cache(odd_step);
  return cache.at(n);
}

double leibniz_partial_value(unsigned n) {
  static SequenceCache cache(leibniz_step);
  return cache.at(n);
}

// --- Stirling / Lah --------------------------------------------------------

namespace {

/// Triangular table of s(k, p) restricted to columns p <= columns_. Rows are
/// appended under the lock; a request for a wider column rebuilds the table.
class StirlingTable {
 public:
  BigInt get(unsigned k, unsigned p) {
    std::lock_guard lock(mutex_);
    if (p > columns_) rebuild(std::max(p, 2 * columns_));
    while (rows_.size() <= k) append_row();
    return rows_[k][p];
  }

 private:
  void rebuild(unsigned columns) {
    columns_ = columns;
    const std::size_t nrows = rows_.size();
    rows_.clear();
    while (rows_.size() < nrows) append_row();
  }

  void append_row() {
    std::vector<BigInt> row(columns_ + 1, BigInt(0));
    if (rows_.empty()) {
      row[0] = 1;
    } else {
      const auto& prev = rows_.back();
      const unsigned long k = rows_.size() - 1;  // building row k + 1
      for (unsigned p = 0; p <= columns_; ++p) {
        BigInt v = -BigInt(k) * prev[p];
        if (p > 0) v += prev[p - 1];
        row[p] = std::move(v);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  unsigned columns_ = 8;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void check_coeff_args(unsigned n, unsigned p) {
  if (n == 0 || p == 0) {
    throw std::invalid_argument("arctan_power_coeff requires n >= 1, p >= 1");
  }
}

bool coeff_vanishes(unsigned n, unsigned p) {
  return n < p || (n - p) % 2 != 0;
}

// ((-1)^((3n+p)/2) + (-1)^((n-p)/2)) * p! / 2^(p+1); only for n = p (mod 2).
BigRational coeff_prefactor(unsigned n, unsigned p) {
  const unsigned long e1 = (3ul * n + p) / 2;
  const unsigned long e2 = (n - p) / 2;
  const long sign_sum = (e1 % 2 == 0 ? 1 : -1) + (e2 % 2 == 0 ? 1 : -1);
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, p + 1);
  return BigRational(BigInt(sign_sum) * factorial(p), pow2);
}

}  // namespace

BigInt stirling_first(unsigned k, unsigned p) {
  if (p > k) return 0;
  return stirling_table().get(k, p);
}

BigInt lah(unsigned n, unsigned k) {
  if (n == 0 || k == 0) throw std::invalid_argument("lah requires n, k >= 1");
  if (k > n) return 0;
  return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

BigRational arctan_power_coeff(unsigned n, unsigned p) {
  check_coeff_args(n, p);
  if (coeff_vanishes(n, p)) return {};
  // sum_{k=p}^{n} 2^k C(n-1,k-1) s(k,p) / k!, accumulated over the common
  // denominator n!: the running factor n!/k! grows as k decreases.
  BigInt sum = 0;
  BigInt falling = 1;  // n!/k!
  for (unsigned k = n; k >= p; --k) {
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k);
    sum += pow2 * binomial(n - 1, k - 1) * stirling_first(k, p) * falling;
    falling *= k;
    if (k == p) break;
  }
  return coeff_prefactor(n, p) * BigRational(sum, factorial(n));
}

BigRational arctan_power_coeff_lah(unsigned n, unsigned p) {
  check_coeff_args(n, p);
  if (coeff_vanishes(n, p)) return {};
  BigInt sum = 0;
  for (unsigned k = p; k <= n; ++k) {
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k);
    sum += pow2 * lah(n, k) * stirling_first(k, p);
  }
  return coeff_prefactor(n, p) * BigRational(sum, factorial(n));
}

double arctan_power_coeff_value(unsigned n, unsigned p) {
  check_coeff_args(n, p);
  if (coeff_vanishes(n, p)) return 0.0;
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, p}); it != cache.end()) return it->second;
  }
  const double v = arctan_power_coeff(n, p).to_double();
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, p), v);
  return v;
}

}  // namespace basel
