#include "congruence/modular.hpp"

#include <limits>
#include <string>

#include "congruence/error.hpp"

namespace congruence {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::DenominatorNotInvertible: return "DenominatorNotInvertible";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndexUnsupported: return "IndexUnsupported";
    case ErrorCode::PrecisionUnsupported: return "PrecisionUnsupported";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MethodUnsupported: return "MethodUnsupported";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::CacheFormat: return "CacheFormat";
  }
  return "Unknown";
}

namespace modular {

u64 pow(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 reduce(i64 v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN
  u64 neg = (static_cast<u64>(-(v + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

u64 inverse(u64 a, u64 m) {
  __extension__ typedef __int128 i128;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NonUnit,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

std::vector<u64> batch_inverse(std::span<const u64> values, u64 m) {
  std::vector<u64> prefix(values.size());
  u64 acc = 1 % m;
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    acc = mul(acc, values[i] % m, m);
  }
  u64 inv = inverse(acc, m);
  std::vector<u64> out(values.size());
  for (std::size_t i = values.size(); i-- > 0;) {
    out[i] = mul(inv, prefix[i], m);
    inv = mul(inv, values[i] % m, m);
  }
  return out;
}

u64 prime_power(u64 p, unsigned k) {
  constexpr u64 kLimit = u64{1} << 63;
  u64 result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (result > (kLimit - 1) / p) {
      throw Error(ErrorCode::RangeExceeded,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds 63 bits");
    }
    result *= p;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // deterministic for n < 3.3e24
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  if (lo < 2) lo = 2;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (u64 i = lo; i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 power_sum(u64 n, u64 e, u64 m) {
  u64 acc = 0;
  for (u64 j = 1; j <= n; ++j) acc = add(acc, pow(j, e, m), m);
  return acc;
}

}  // namespace modular
}  // namespace congruence
