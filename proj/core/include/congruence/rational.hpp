#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace congruence {

using BigInt = mpz_class;

/// Exact fraction, always stored reduced with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : q_(n) {}                      // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  /// Parses "a" or "a/b".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_raw(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned e) const;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  static Rational from_raw(mpq_class q);

 private:
  mpq_class q_;
};

/// n!/(k!(n-k)!) for 0 <= k <= n, else 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Falling-factorial binomial x(x-1)...(x-k+1)/k!, valid for any integer x;
/// zero when k < 0.
BigInt generalized_binomial(std::int64_t x, std::int64_t k);

/// Exponent of p in a nonzero integer.
unsigned valuation(const BigInt& n, std::uint64_t p);

}  // namespace congruence
