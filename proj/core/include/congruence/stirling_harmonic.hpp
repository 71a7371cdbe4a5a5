#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// Rows of unsigned Stirling numbers of the first kind, built with
/// [n+1, s] = [n, s-1] + n [n, s] and kept for reuse. Returned references
/// stay valid for the table's lifetime.
class StirlingTable {
 public:
  static StirlingTable& shared();
  const std::vector<BigInt>& row(std::int64_t n);

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<BigInt>> rows_;
};

/// [n, s]. Throws CapExceeded past limits.stirling_cap.
BigInt stirling_first(std::int64_t n, std::int64_t s, const Limits& limits = kDefaultLimits);

/// A_r = [p, p-r].
BigInt glaisher_A(std::uint64_t p, std::int64_t r, const Limits& limits = kDefaultLimits);

/// H_{n,m} = sum_{j=1}^{n} 1/j^m. Throws CapExceeded past limits.harmonic_cap.
Rational harmonic_exact(std::int64_t n, std::int64_t m, const Limits& limits = kDefaultLimits);

/// H_{p-1,m} mod p^power by accumulating batched inverses; O(p log m).
ResidueModPk harmonic_sum_mod(std::uint64_t p, std::int64_t m, unsigned power);

enum class StirlingMethod { Exact, SumsMinusHarmonic, BernoulliSquare, BernoulliCube, Glaisher };
enum class HarmonicMethod { Exact, GlaisherStirling, GlaisherBernoulli, PowerSums, BernoulliSquare, Sun };

std::string_view to_string(StirlingMethod m);
std::string_view to_string(HarmonicMethod m);
StirlingMethod parse_stirling_method(std::string_view name);
HarmonicMethod parse_harmonic_method(std::string_view name);

/// [p, k] mod p^power by the chosen route. Each route has its own index range
/// and highest supported power; violations throw IndexUnsupported or
/// PreconditionViolated.
ResidueModPk stirling_mod(std::uint64_t p, std::int64_t k, StirlingMethod method, unsigned power,
                          const Limits& limits = kDefaultLimits);

/// H_{p-1,m} mod p^power by the chosen route.
ResidueModPk harmonic_mod(std::uint64_t p, std::int64_t m, HarmonicMethod method, unsigned power,
                          const Limits& limits = kDefaultLimits);

/// Highest power the route determines H_{p-1,m} to.
unsigned harmonic_method_power(std::uint64_t p, std::int64_t m, HarmonicMethod method);

/// C(2p-1, p-1) mod p^3.
ResidueModPk wolstenholme_binomial(std::uint64_t p);
/// W_p = (C(2p-1, p-1) - 1) / p^3 mod p, for p >= 5.
ResidueModPk wolstenholme_quotient(std::uint64_t p);
/// H_{p-1,1} = 0 mod p^3 (p >= 5).
bool is_wolstenholme_prime(std::uint64_t p);

}  // namespace congruence
