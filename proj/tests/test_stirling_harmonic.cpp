#include <gtest/gtest.h>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/stirling_harmonic.hpp"

using namespace congruence;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling_first(0, 0), BigInt(1));
  EXPECT_EQ(stirling_first(4, 2), BigInt(11));
  EXPECT_EQ(stirling_first(5, 2), BigInt(50));
  EXPECT_EQ(stirling_first(5, 3), BigInt(35));
  EXPECT_EQ(code_of([] { stirling_first(5, 6); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(glaisher_A(5, 1), BigInt(10));
}

TEST(Stirling, RowSumIsFactorial) {
  BigInt factorial = 1;
  for (std::int64_t n = 1; n <= 40; ++n) {
    factorial *= n;
    BigInt total = 0;
    for (std::int64_t s = 0; s <= n; ++s) total += stirling_first(n, s);
    EXPECT_EQ(total, factorial) << n;
  }
}

TEST(Stirling, CapIsEnforced) {
  Limits tight;
  tight.stirling_cap = 10;
  EXPECT_EQ(code_of([&] { stirling_first(11, 2, tight); }), ErrorCode::CapExceeded);
}

TEST(Stirling, RoutesAgreeWithExactWhereTheyApply) {
  for (auto p : modular::primes_in_range(7, 80)) {
    auto ip = static_cast<std::int64_t>(p);
    for (std::int64_t k = 2; k <= ip - 2; ++k) {
      auto exact2 = stirling_mod(p, k, StirlingMethod::Exact, 2);
      EXPECT_EQ(stirling_mod(p, k, StirlingMethod::SumsMinusHarmonic, 2), exact2) << p << " " << k;
      EXPECT_EQ(stirling_mod(p, k, StirlingMethod::Glaisher, 2), exact2) << p << " " << k;
      EXPECT_EQ(stirling_mod(p, k, StirlingMethod::BernoulliSquare, 2), exact2) << p << " " << k;
    }
  }
  EXPECT_EQ(code_of([] { stirling_mod(7, 0, StirlingMethod::Glaisher, 2); }), ErrorCode::IndexUnsupported);
}

TEST(Harmonic, ExactValues) {
  EXPECT_EQ(harmonic_exact(4, 1), Rational(25, 12));
  EXPECT_EQ(harmonic_exact(3, 2), Rational(49, 36));
  EXPECT_EQ(code_of([] { harmonic_exact(0, 3); }), ErrorCode::InvalidArgument);
}

TEST(Harmonic, ModularSumMatchesExact) {
  for (auto p : modular::primes_in_range(5, 60)) {
    for (std::int64_t m = 1; m <= 8; ++m) {
      for (unsigned k = 1; k <= 3; ++k) {
        EXPECT_EQ(harmonic_sum_mod(p, m, k), rational_mod_pk(harmonic_exact(static_cast<std::int64_t>(p) - 1, m), p, k))
            << p << " " << m << " " << k;
      }
    }
  }
}

TEST(Harmonic, RoutesAgreeWithExact) {
  for (auto name : {"glaisher_stirling", "glaisher_bernoulli", "power_sums", "bernoulli_p2", "sun"}) {
    auto method = parse_harmonic_method(name);
    EXPECT_EQ(to_string(method), name);
    for (auto p : modular::primes_in_range(11, 60)) {
      for (std::int64_t m = 2; m <= static_cast<std::int64_t>(p) - 4; ++m) {
        unsigned power = 0;
        try {
          power = harmonic_method_power(p, m, method);
        } catch (const Error&) {
          continue;
        }
        if (power == 0) continue;
        EXPECT_EQ(harmonic_mod(p, m, method, power), harmonic_sum_mod(p, m, power)) << name << " " << p << " " << m;
      }
    }
  }
}

TEST(Harmonic, Wolstenholme) {
  EXPECT_EQ(wolstenholme_binomial(5).value(), 1u);
  EXPECT_EQ(wolstenholme_quotient(5).value(), 1u);
  EXPECT_EQ(wolstenholme_quotient(7).value(), 5u);
  for (auto p : modular::primes_in_range(5, 200)) {
    EXPECT_TRUE(harmonic_sum_mod(p, 1, 2).is_zero()) << p;
    EXPECT_EQ(wolstenholme_binomial(p).value(), 1u) << p;
  }
  EXPECT_TRUE(is_wolstenholme_prime(16843));
  EXPECT_FALSE(is_wolstenholme_prime(7));
}
