#include "congruence/residue.hpp"

#include "congruence/error.hpp"
#include "congruence/modular.hpp"

namespace congruence {

namespace md = modular;

ResidueModPk::ResidueModPk(std::uint64_t prime, unsigned power, std::int64_t value)
    : prime_(prime), power_(power) {
  if (power == 0) throw Error(ErrorCode::InvalidArgument, "power must be >= 1");
  if (!md::is_prime(prime)) throw Error(ErrorCode::NotPrime, std::to_string(prime));
  modulus_ = md::prime_power(prime, power);
  value_ = md::reduce(value, modulus_);
}

ResidueModPk ResidueModPk::from_unsigned(std::uint64_t prime, unsigned power, std::uint64_t value) {
  ResidueModPk r(prime, power);
  r.value_ = value % r.modulus_;
  return r;
}

ResidueModPk ResidueModPk::from_big(std::uint64_t prime, unsigned power, const BigInt& value) {
  ResidueModPk r(prime, power);
  r.value_ = big_mod(value, r.modulus_);
  return r;
}

void ResidueModPk::require_same_modulus(const ResidueModPk& o) const {
  if (prime_ != o.prime_ || power_ != o.power_) {
    throw Error(ErrorCode::ModulusMismatch, modulus_string() + " vs " + o.modulus_string());
  }
}

ResidueModPk ResidueModPk::operator-() const {
  return {prime_, power_, modulus_, value_ == 0 ? 0 : modulus_ - value_};
}

ResidueModPk& ResidueModPk::operator+=(const ResidueModPk& o) {
  require_same_modulus(o);
  value_ = md::add(value_, o.value_, modulus_);
  return *this;
}

ResidueModPk& ResidueModPk::operator-=(const ResidueModPk& o) {
  require_same_modulus(o);
  value_ = md::sub(value_, o.value_, modulus_);
  return *this;
}

ResidueModPk& ResidueModPk::operator*=(const ResidueModPk& o) {
  require_same_modulus(o);
  value_ = md::mul(value_, o.value_, modulus_);
  return *this;
}

bool operator==(const ResidueModPk& a, const ResidueModPk& b) {
  a.require_same_modulus(b);
  return a.value_ == b.value_;
}

ResidueModPk ResidueModPk::inverse() const {
  if (!is_unit()) {
    throw Error(ErrorCode::NonUnit, std::to_string(value_) + " mod " + modulus_string());
  }
  return {prime_, power_, modulus_, md::inverse(value_, modulus_)};
}

ResidueModPk ResidueModPk::pow(std::uint64_t e) const {
  return {prime_, power_, modulus_, md::pow(value_, e, modulus_)};
}

ResidueModPk ResidueModPk::reduce_to(unsigned power) const {
  if (power == 0 || power > power_) {
    throw Error(ErrorCode::PrecisionUnsupported,
                "cannot reduce " + modulus_string() + " to power " + std::to_string(power));
  }
  std::uint64_t m = md::prime_power(prime_, power);
  return {prime_, power, m, value_ % m};
}

std::uint64_t ResidueModPk::digit(unsigned j) const {
  std::uint64_t v = value_;
  for (unsigned i = 0; i < j; ++i) v /= prime_;
  return v % prime_;
}

std::string ResidueModPk::modulus_string() const {
  return std::to_string(prime_) + "^" + std::to_string(power_);
}

std::uint64_t big_mod(const BigInt& x, std::uint64_t m) {
  BigInt r;
  BigInt mod(static_cast<unsigned long>(m));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

ResidueModPk rational_mod_pk(const Rational& x, std::uint64_t p, unsigned k) {
  ResidueModPk zero(p, k);
  std::uint64_t m = zero.modulus();
  std::uint64_t den = big_mod(x.denominator(), m);
  if (den % p == 0) {
    throw Error(ErrorCode::DenominatorNotInvertible,
                x.to_string() + " has denominator divisible by " + std::to_string(p));
  }
  std::uint64_t num = big_mod(x.numerator(), m);
  return ResidueModPk::from_unsigned(p, k, md::mul(num, md::inverse(den, m), m));
}

}  // namespace congruence
