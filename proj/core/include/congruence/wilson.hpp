#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// k^{p-1} = 1 + p*delta0(k) mod p^2, 1 <= k <= p-1.
std::uint64_t delta0(std::uint64_t k, std::uint64_t p);
/// Third base-p digit of k^{p-1} mod p^3.
std::uint64_t delta1(std::uint64_t k, std::uint64_t p);

/// The p-adic root x_k of g(X) = X^{p-1} + (p-1)! with x_k = k mod p, known to
/// `digits.size()` base-p digits.
struct RootLift {
  std::uint64_t prime;
  std::uint64_t base;
  std::vector<std::uint64_t> digits;

  unsigned precision() const { return static_cast<unsigned>(digits.size()); }
  /// x_k mod p^precision.
  ResidueModPk value() const;
};

/// Newton iteration mod p^precision (precision <= 4). Throws NonUnit when
/// p | k.
RootLift hensel_root(std::int64_t k, std::uint64_t p, unsigned precision);

/// All x_1..x_{p-1}.
std::vector<RootLift> all_root_lifts(std::uint64_t p, unsigned precision);

/// Closed form for the digit t_k^(0): p t = k(1 + (p-1)! + p delta0(k)) mod p^2.
std::uint64_t first_digit_closed_form(std::uint64_t k, std::uint64_t p);

/// Closed form k(d0 + d1 + s^2 + (1 + d0) s) mod p with d = delta(k) and
/// s = sum of all delta0.
std::uint64_t second_digit_closed_form(std::uint64_t k, std::uint64_t p);

/// (x_k - k - k(1 + (p-1)! + p delta0(k))) / p^2 mod p, the second-order digit
/// of the lift measured from the first-order offset. Needs precision >= 3.
std::uint64_t lift_second_offset(const RootLift& lift);

/// (p-1)! mod p^k by direct product.
ResidueModPk factorial_mod_pk(std::uint64_t p, unsigned k);

/// (p-1)! = -1 + p J + p^2 third mod p^3 (digits of the canonical residue of
/// (p-1)! + 1).
struct WilsonDigits {
  std::uint64_t prime;
  std::uint64_t J;
  std::uint64_t third_digit;
};

WilsonDigits wilson_digits(std::uint64_t p);

enum class WilsonMethod { FermatQuotient, FaulhaberTrailing, Glaisher, PowerSums, FermatDigits, BernoulliCubic, Sun, SunExpanded };

std::string_view to_string(WilsonMethod m);
/// Throws MethodUnsupported on an unknown name.
WilsonMethod parse_wilson_method(std::string_view name);
/// 2 for FermatQuotient/FaulhaberTrailing/Glaisher, 3 otherwise.
unsigned wilson_method_power(WilsonMethod m);

/// (p-1)! mod p^2 or p^3 by the chosen route, without forming (p-1)!.
ResidueModPk wilson_predict(std::uint64_t p, WilsonMethod method, const Limits& limits = kDefaultLimits);

/// Primes p <= max with (p-1)! = -1 mod p^2.
std::vector<std::uint64_t> wilson_primes(std::uint64_t max);

}  // namespace congruence
