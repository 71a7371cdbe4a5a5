#include "congruence/polynomial.hpp"

#include <algorithm>

#include "congruence/error.hpp"

namespace congruence {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<std::int64_t> coefficients) {
  c_.reserve(coefficients.size());
  for (auto c : coefficients) c_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i].raw() * o.c_[j].raw();
  }
  c_.clear();
  c_.reserve(out.size());
  for (auto& v : out) c_.push_back(Rational::from_raw(std::move(v)));
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (degree() < d.degree()) return {RationalPolynomial(), *this};
  std::vector<mpq_class> rem;
  rem.reserve(c_.size());
  for (const auto& c : c_) rem.push_back(c.raw());
  const std::size_t dn = d.c_.size();
  const mpq_class lead_inv = 1 / d.leading().raw();
  std::vector<mpq_class> quot(c_.size() - dn + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpq_class f = rem[i + dn - 1] * lead_inv;
    f.canonicalize();
    quot[i] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= f * d.c_[j].raw();
  }
  std::vector<Rational> q, r;
  q.reserve(quot.size());
  for (auto& v : quot) q.push_back(Rational::from_raw(std::move(v)));
  rem.resize(dn - 1);
  r.reserve(rem.size());
  for (auto& v : rem) r.push_back(Rational::from_raw(std::move(v)));
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial RationalPolynomial::operator%(const RationalPolynomial& d) const {
  return divmod(d).second;
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::substitute_power(unsigned e) const {
  if (e == 0) return constant(evaluate(1));
  if (is_zero()) return {};
  std::vector<Rational> out((c_.size() - 1) * e + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * e] = c_[i];
  return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string RationalPolynomial::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) s += ',';
    s += c_[i].to_string();
  }
  return s + "]";
}

RationalPolynomial poly_inverse_mod(const RationalPolynomial& f, const RationalPolynomial& m) {
  if (m.degree() < 1) throw Error(ErrorCode::InvalidArgument, "modulus must have positive degree");
  // Invariant: s_i * f = r_i (mod m).
  RationalPolynomial r0 = m, r1 = f % m;
  RationalPolynomial s0, s1 = RationalPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + f.to_string() + ", " + m.to_string() +
                                           ") has degree " + std::to_string(r0.degree()));
  }
  return (s0 * (Rational(1) / r0.leading())) % m;
}

}  // namespace congruence
