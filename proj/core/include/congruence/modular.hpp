#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Word-size modular arithmetic. Moduli stay below 2^63 so that sums of two
// reduced values never overflow; products go through unsigned __int128.

namespace congruence::modular {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

inline u64 mul(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }
inline u64 add(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 pow(u64 base, u64 exp, u64 m);

/// Reduces a signed value into [0, m).
u64 reduce(i64 v, u64 m);

/// Inverse of a modulo m; throws NonUnit when gcd(a, m) != 1.
u64 inverse(u64 a, u64 m);

/// Inverts every element of `values` modulo m with a single extended-gcd call
/// (prefix products). All values must be units.
std::vector<u64> batch_inverse(std::span<const u64> values, u64 m);

/// p^k, throwing RangeExceeded when it would not fit below 2^63.
u64 prime_power(u64 p, unsigned k);

bool is_prime(u64 n);

/// Primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Exponent of p in n (n != 0).
unsigned valuation(u64 n, u64 p);

/// sum_{j=1}^{n} j^e mod m.
u64 power_sum(u64 n, u64 e, u64 m);

}  // namespace congruence::modular
