#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "congruence/rational.hpp"

namespace congruence {

/// Dense polynomial over Q in the variable q. coefficients()[i] is the
/// coefficient of q^i; the leading coefficient is never zero, so the zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<std::int64_t> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  const Rational& leading() const { return c_.back(); }

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& s);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  /// Quotient and remainder; throws InvalidArgument on division by zero.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;
  RationalPolynomial operator%(const RationalPolynomial& d) const;

  RationalPolynomial pow(unsigned e) const;
  /// f(q) -> f(q^e).
  RationalPolynomial substitute_power(unsigned e) const;
  Rational evaluate(const Rational& x) const;

  /// "[c0,c1,...]"; the zero polynomial is "[]".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// g with f*g = 1 mod m and deg g < deg m, by the extended Euclidean
/// algorithm over Q. Throws NotCoprime when gcd(f, m) is not constant.
RationalPolynomial poly_inverse_mod(const RationalPolynomial& f, const RationalPolynomial& m);

}  // namespace congruence
