#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// p^valuation * unit, with the unit known modulo p^precision. Exact zero is
/// flagged separately and compares as having infinite valuation.
class PadicValue {
 public:
  PadicValue(std::int64_t valuation, ResidueModPk unit);
  static PadicValue zero(std::uint64_t prime, unsigned precision);

  std::uint64_t prime() const { return unit_.prime(); }
  unsigned precision() const { return unit_.power(); }
  bool is_zero() const { return zero_; }
  /// Throws InvalidArgument for exact zero.
  std::int64_t valuation() const;
  const ResidueModPk& unit() const { return unit_; }

  /// True when the value is divisible by p^k (always true for zero).
  bool valuation_at_least(std::int64_t k) const { return zero_ || valuation_ >= k; }

  /// j-th base-p digit of the unit part.
  std::uint64_t digit(unsigned j) const { return unit_.digit(j); }

  /// p^v * unit mod p^k. Needs v >= 0 and v + precision >= k, otherwise
  /// PrecisionUnsupported.
  ResidueModPk to_residue(unsigned k) const;

  std::string to_string() const;

  friend bool operator==(const PadicValue& a, const PadicValue& b);

 private:
  PadicValue(ResidueModPk unit, bool zero) : valuation_(0), unit_(unit), zero_(zero) {}

  std::int64_t valuation_;
  ResidueModPk unit_;
  bool zero_ = false;
};

/// Splits x into p^v * unit with the unit reduced mod p^precision.
PadicValue padic_of_rational(const Rational& x, std::uint64_t p, unsigned precision);

}  // namespace congruence
