#pragma once

#include <cstdint>

namespace congruence {

/// Size caps shared by the modules. Defaults match the CLI defaults.
struct Limits {
  std::int64_t stirling_cap = 3000;
  /// Bernoulli indices at or below this use the exact table; above, the
  /// modular sums-of-powers route.
  std::int64_t bernoulli_exact_cap = 400;
  std::int64_t derby_cap = 101;
  std::int64_t factorization_cap = 1'000'000'000;
  std::int64_t harmonic_cap = 3000;
};

inline constexpr Limits kDefaultLimits{};

}  // namespace congruence
