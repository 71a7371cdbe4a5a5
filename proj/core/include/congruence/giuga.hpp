#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/rational.hpp"

namespace congruence {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Trial division. Throws FactorizationFailed above limits.factorization_cap.
Factorization factorize(std::uint64_t n, const Limits& limits = kDefaultLimits);

struct CompositeProfile {
  std::uint64_t n;
  Factorization prime_factors;
  bool is_prime;
  bool is_squarefree;
  /// Prime factors p with (p-1) | (n/p - 1).
  std::vector<std::uint64_t> carmichael_at;
  bool is_carmichael;
  bool is_giuga;
};

/// Carmichael by Korselt (squarefree composite, p-1 | n-1 for every p | n);
/// Giuga by p | (n/p - 1) for every p | n.
CompositeProfile classify(std::uint64_t n, const Limits& limits = kDefaultLimits);

/// sum_{p|n} 1/p - 1/n. Throws NotSquarefree.
Rational giuga_sum(std::uint64_t n, const Limits& limits = kDefaultLimits);

/// n B_{n-1} mod n, reduced from the exact rational. Throws RangeExceeded
/// past limits.bernoulli_exact_cap.
std::uint64_t agoh_giuga_residue(std::uint64_t n, const Limits& limits = kDefaultLimits);

enum class CompositeKind { Carmichael, Giuga };

CompositeKind parse_composite_kind(std::string_view name);

/// All n <= limit of the given kind, ascending. Uses a smallest-factor sieve.
std::vector<std::uint64_t> enumerate(CompositeKind kind, std::uint64_t limit);

/// a^n = a mod n.
bool fermat_holds(std::uint64_t n, std::uint64_t a);

/// For squarefree composite n: n B_{n-1} != 0 mod n iff some p | n has
/// (p-1) | (n-1). Returns whether both sides agree.
bool squarefree_criterion_holds(std::uint64_t n, const Limits& limits = kDefaultLimits);

/// p B_{n-1} mod p is p-1 when (p-1) | (n-1) and 0 otherwise. Returns the
/// residue actually observed.
std::uint64_t prime_multiple_residue(std::uint64_t p, std::uint64_t n);

/// Odd squarefree n = p m with p | m-1 and (p-1) not dividing m-1, and
/// B_{m-1} in exact range.
struct OddGiugaPair {
  std::uint64_t p;
  std::uint64_t m;
};

std::vector<OddGiugaPair> odd_giuga_pairs(std::uint64_t max_m, std::uint64_t max_p);

}  // namespace congruence
