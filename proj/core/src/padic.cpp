#include "congruence/padic.hpp"

#include "congruence/error.hpp"
#include "congruence/modular.hpp"

namespace congruence {

PadicValue::PadicValue(std::int64_t valuation, ResidueModPk unit) : valuation_(valuation), unit_(unit) {
  if (!unit_.is_unit()) {
    throw Error(ErrorCode::NonUnit, "unit part " + unit_.to_string() + " is divisible by " +
                                        std::to_string(unit_.prime()));
  }
}

PadicValue PadicValue::zero(std::uint64_t prime, unsigned precision) {
  return PadicValue(ResidueModPk(static_cast<std::uint64_t>(prime), precision, 0), true);
}

std::int64_t PadicValue::valuation() const {
  if (zero_) throw Error(ErrorCode::InvalidArgument, "valuation of exact zero");
  return valuation_;
}

ResidueModPk PadicValue::to_residue(unsigned k) const {
  if (zero_) return ResidueModPk(prime(), k, 0);
  if (valuation_ < 0) {
    throw Error(ErrorCode::PrecisionUnsupported,
                "negative valuation " + std::to_string(valuation_) + " has no residue");
  }
  if (valuation_ >= static_cast<std::int64_t>(k)) return ResidueModPk(prime(), k, 0);
  auto v = static_cast<unsigned>(valuation_);
  if (v + precision() < k) {
    throw Error(ErrorCode::PrecisionUnsupported, "unit known mod p^" + std::to_string(precision()) +
                                                     ", need p^" + std::to_string(k - v));
  }
  std::uint64_t m = modular::prime_power(prime(), k);
  std::uint64_t scale = modular::prime_power(prime(), v);
  return ResidueModPk::from_unsigned(prime(), k, modular::mul(unit_.value() % m, scale, m));
}

std::string PadicValue::to_string() const {
  if (zero_) return "0";
  return std::to_string(prime()) + "^" + std::to_string(valuation_) + "*" + unit_.to_string() +
         " (mod " + unit_.modulus_string() + ")";
}

bool operator==(const PadicValue& a, const PadicValue& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_ && a.prime() == b.prime();
  return a.valuation_ == b.valuation_ && a.unit_ == b.unit_;
}

PadicValue padic_of_rational(const Rational& x, std::uint64_t p, unsigned precision) {
  if (x.is_zero()) return PadicValue::zero(p, precision);
  BigInt prime(static_cast<unsigned long>(p));
  BigInt num, den;
  auto vn = static_cast<std::int64_t>(
      mpz_remove(num.get_mpz_t(), x.numerator().get_mpz_t(), prime.get_mpz_t()));
  auto vd = static_cast<std::int64_t>(
      mpz_remove(den.get_mpz_t(), x.denominator().get_mpz_t(), prime.get_mpz_t()));
  return PadicValue(vn - vd, rational_mod_pk(Rational(num, den), p, precision));
}

}  // namespace congruence
