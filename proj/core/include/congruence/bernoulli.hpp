#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/padic.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// Memoized exact Bernoulli numbers, B_1 = +1/2. Readers share a lock; a
/// request past the current end extends the table under an exclusive lock.
///
/// When a cache file is attached, it is loaded up front and rewritten
/// (temp file + rename) after every extension. Format: one line per index,
/// "<index> <numerator>/<denominator>", ascending from 0.
class BernoulliTable {
 public:
  BernoulliTable() = default;
  explicit BernoulliTable(std::filesystem::path cache);

  /// Process-wide table. Picks up CONGRUENCE_CACHE on first use.
  static BernoulliTable& shared();

  Rational get(std::int64_t n);
  /// Loads `path` if it exists and persists there from now on. Throws
  /// CacheFormat on a malformed file.
  void attach_cache(std::filesystem::path path);
  std::optional<std::filesystem::path> cache_path() const;
  std::int64_t size() const;
  void persist() const;

 private:
  void extend_locked(std::int64_t n);
  void persist_locked() const;
  void load_locked(const std::filesystem::path& path);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
  std::optional<std::filesystem::path> cache_;
};

/// B_n with B_1 = +1/2.
Rational bernoulli_exact(std::int64_t n);
/// B_n with B_1 = -1/2.
Rational bernoulli_classical(std::int64_t n);

/// B_m mod p for even 2 <= m <= p-3, from sum_{j<p} j^m mod p^2. Throws
/// IndexOutOfRange otherwise.
ResidueModPk bernoulli_mod_p(std::int64_t m, std::uint64_t p);

/// p*B_m mod p^power (power <= 3, m >= 0). Uses the exact table up to
/// limits.bernoulli_exact_cap and the sums-of-powers route above it (p >= 5).
ResidueModPk pB_mod(std::int64_t m, std::uint64_t p, unsigned power, const Limits& limits = kDefaultLimits);

/// p*B_{k(p-1)} as a p-adic value. Throws PrecisionUnsupported for
/// precision > 3 and PreconditionViolated for p < 5.
PadicValue padic_pB(std::int64_t k, std::uint64_t p, unsigned precision, const Limits& limits = kDefaultLimits);

struct IrregularPair {
  std::uint64_t prime;
  std::int64_t index;
  friend bool operator==(const IrregularPair&, const IrregularPair&) = default;
};

/// Even m in [2, p-3] with p | B_m, ascending.
std::vector<IrregularPair> irregular_pairs(std::uint64_t p);

/// Exact check of Miki's identity for B_n/n. Odd n holds trivially.
bool miki_identity_check(std::int64_t n);

/// Whether p^l divides the numerator of B_n. Requires p > 3, p^l | n,
/// (p-1) not dividing n, n even and n <= 400.
bool adams_check(std::int64_t n, std::uint64_t p, unsigned l);

struct ThangaduraiFinding {
  std::int64_t n;
  std::uint64_t p;
  unsigned l;     // v_p(n)
  unsigned beta;  // v_p(numerator of B_n)
};

/// Pairs (n, p) with n even <= max_n, 5 <= p <= max_p, p | n, (p-1) not
/// dividing n and beta > l + 1.
std::vector<ThangaduraiFinding> thangadurai_scan(std::int64_t max_n, std::uint64_t max_p);

/// B_n + sum of 1/q over primes q with (q-1) | n is an integer (n even >= 2).
bool von_staudt_clausen_holds(std::int64_t n);

}  // namespace congruence
