#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace basel {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  BigRational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  BigRational& operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) {
    return a += b;
  }
  friend BigRational operator-(BigRational a, const BigRational& b) {
    return a -= b;
  }
  friend BigRational operator*(BigRational a, const BigRational& b) {
    return a *= b;
  }
  friend BigRational operator/(BigRational a, const BigRational& b) {
    return a /= b;
  }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

}  // namespace basel
