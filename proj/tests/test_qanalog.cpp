#include <gtest/gtest.h>

#include <random>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

using namespace congruence;

TEST(QAnalog, Integers) {
  EXPECT_EQ(q_integer(3).to_string(), "[1,1,1]");
  EXPECT_THROW(q_integer(0), Error);
  EXPECT_EQ(RationalPolynomial().to_string(), "[]");
  EXPECT_EQ(q_integer(5).evaluate(1), Rational(5));
}

TEST(QAnalog, GaussianBinomials) {
  EXPECT_EQ(q_binomial(4, 2), (RationalPolynomial{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(5, 0), (RationalPolynomial{1}));
  EXPECT_THROW(q_binomial(3, 4), Error);
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      EXPECT_EQ(q_binomial(n, m).evaluate(1), Rational(binomial(n, m))) << n << " " << m;
      EXPECT_EQ(q_binomial(n, m), q_binomial(n, n - m));
    }
  }
}

TEST(QAnalog, Reduction) {
  auto side = q_reduce(q_integer(5).pow(2) + RationalPolynomial{3}, 5, 1);
  EXPECT_EQ(side.value, (RationalPolynomial{3}));
  EXPECT_EQ(side.modulus_string(), "[5]_q^1");
  auto twice = q_reduce(q_reduce(q_binomial(9, 4), 7, 2).value, 7, 1);
  EXPECT_EQ(twice, q_reduce(q_binomial(9, 4), 7, 1));
}

TEST(QAnalog, HarmonicAtQEqualsOne) {
  for (auto p : modular::primes_in_range(3, 13)) {
    auto side = q_harmonic_mod(p, 1, false, 1);
    EXPECT_EQ(side.prime, p);
    EXPECT_LT(side.value.degree(), static_cast<std::ptrdiff_t>(p) - 1);
  }
}

TEST(QAnalog, LucasAndKummer) {
  std::mt19937_64 rng(12345);
  for (auto p : modular::primes_in_range(2, 31)) {
    std::uniform_int_distribution<std::uint64_t> dist(0, 500);
    for (int i = 0; i < 50; ++i) {
      std::uint64_t n = dist(rng);
      std::uint64_t m = dist(rng) % (n + 1);
      BigInt c = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m));
      EXPECT_EQ(lucas_product(n, m, p), big_mod(c, p)) << n << " " << m << " " << p;
      EXPECT_EQ(kummer_carries(n, m, p), valuation(c, p)) << n << " " << m << " " << p;
    }
  }
  EXPECT_EQ(lucas_product(10, 3, 3), 0u);
  EXPECT_EQ(kummer_carries(10, 3, 3), 1u);
}

TEST(QAnalog, HelouTerjanianExponent) {
  EXPECT_EQ(helou_terjanian_exponent(5, 0, 5), -1);
  EXPECT_EQ(helou_terjanian_exponent(10, 5, 5), 3 + 1 + 1 + 0);
}

TEST(QAnalog, DilcherDeterminant) {
  EXPECT_EQ(dilcher_D(1, 3, false), Rational(binomial(4, 2)));
  EXPECT_EQ(dilcher_D(1, 3, true), Rational(binomial(3, 2)));
}
