#pragma once

#include <cstdint>
#include <string>

#include "congruence/rational.hpp"

namespace congruence {

/// A value modulo p^k. The modulus is carried as (prime, power), so mixing
/// residues of different moduli is an error rather than a silent bug.
class ResidueModPk {
 public:
  /// Throws NotPrime when `prime` is not prime, RangeExceeded when p^k does
  /// not fit below 2^63.
  ResidueModPk(std::uint64_t prime, unsigned power, std::int64_t value = 0);
  static ResidueModPk from_unsigned(std::uint64_t prime, unsigned power, std::uint64_t value);
  static ResidueModPk from_big(std::uint64_t prime, unsigned power, const BigInt& value);

  std::uint64_t prime() const { return prime_; }
  unsigned power() const { return power_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t value() const { return value_; }

  bool is_unit() const { return value_ % prime_ != 0; }
  bool is_zero() const { return value_ == 0; }

  ResidueModPk operator-() const;
  ResidueModPk& operator+=(const ResidueModPk& o);
  ResidueModPk& operator-=(const ResidueModPk& o);
  ResidueModPk& operator*=(const ResidueModPk& o);
  friend ResidueModPk operator+(ResidueModPk a, const ResidueModPk& b) { return a += b; }
  friend ResidueModPk operator-(ResidueModPk a, const ResidueModPk& b) { return a -= b; }
  friend ResidueModPk operator*(ResidueModPk a, const ResidueModPk& b) { return a *= b; }
  friend bool operator==(const ResidueModPk& a, const ResidueModPk& b);

  ResidueModPk inverse() const;
  ResidueModPk pow(std::uint64_t e) const;
  /// Same residue at a lower power.
  ResidueModPk reduce_to(unsigned power) const;
  /// Base-p digit j of the canonical representative.
  std::uint64_t digit(unsigned j) const;

  /// Decimal string of the canonical representative.
  std::string to_string() const { return std::to_string(value_); }
  /// "p^k"
  std::string modulus_string() const;

 private:
  ResidueModPk(std::uint64_t prime, unsigned power, std::uint64_t modulus, std::uint64_t value)
      : prime_(prime), power_(power), modulus_(modulus), value_(value) {}
  void require_same_modulus(const ResidueModPk& o) const;

  std::uint64_t prime_;
  unsigned power_;
  std::uint64_t modulus_;
  std::uint64_t value_;
};

/// a * b^{-1} mod p^k for x = a/b. Throws DenominatorNotInvertible when p | b.
ResidueModPk rational_mod_pk(const Rational& x, std::uint64_t p, unsigned k);

/// Reduces an integer into [0, m).
std::uint64_t big_mod(const BigInt& x, std::uint64_t m);

}  // namespace congruence
