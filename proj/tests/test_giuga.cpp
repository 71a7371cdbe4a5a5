#include <gtest/gtest.h>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/giuga.hpp"
#include "congruence/modular.hpp"

using namespace congruence;

TEST(Giuga, Factorize) {
  EXPECT_EQ(factorize(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97), (Factorization{{97, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  Limits tight;
  tight.factorization_cap = 1000;
  EXPECT_THROW(factorize(1001, tight), Error);
}

TEST(Giuga, Classify) {
  auto c = classify(561);
  EXPECT_FALSE(c.is_prime);
  EXPECT_TRUE(c.is_squarefree);
  EXPECT_TRUE(c.is_carmichael);
  EXPECT_FALSE(c.is_giuga);
  auto g = classify(30);
  EXPECT_TRUE(g.is_giuga);
  EXPECT_FALSE(g.is_carmichael);
  EXPECT_FALSE(classify(12).is_squarefree);
  EXPECT_TRUE(classify(13).is_prime);
}

TEST(Giuga, Enumerate) {
  EXPECT_EQ(enumerate(CompositeKind::Carmichael, 3000), (std::vector<std::uint64_t>{561, 1105, 1729, 2465, 2821}));
  EXPECT_EQ(enumerate(CompositeKind::Giuga, 2000), (std::vector<std::uint64_t>{30, 858, 1722}));
  EXPECT_EQ(parse_composite_kind("giuga"), CompositeKind::Giuga);
  EXPECT_THROW(parse_composite_kind("perfect"), Error);
}

TEST(Giuga, SumAndFermat) {
  EXPECT_EQ(giuga_sum(30), Rational(1));
  EXPECT_EQ(giuga_sum(858), Rational(1));
  EXPECT_EQ(giuga_sum(6), Rational(2, 3));
  EXPECT_THROW(giuga_sum(12), Error);
  for (std::uint64_t a = 2; a < 20; ++a) EXPECT_TRUE(fermat_holds(561, a)) << a;
  EXPECT_FALSE(fermat_holds(15, 2));
}

TEST(Giuga, AgohResidues) {
  for (auto p : modular::primes_in_range(3, 200)) EXPECT_EQ(agoh_giuga_residue(p), p - 1) << p;
  EXPECT_EQ(agoh_giuga_residue(30), 0u);
}

TEST(Giuga, SquarefreeCriterionOnOddComposites) {
  for (std::uint64_t n = 15; n <= 400; n += 2) {
    auto c = classify(n);
    if (c.is_prime || !c.is_squarefree) continue;
    EXPECT_TRUE(squarefree_criterion_holds(n)) << n;
  }
}

TEST(Giuga, PrimeMultipleResidue) {
  for (auto p : modular::primes_in_range(3, 40)) {
    for (std::uint64_t n = 3; n <= 120; n += 2) {
      std::uint64_t expected = (n - 1) % (p - 1) == 0 ? p - 1 : 0;
      EXPECT_EQ(prime_multiple_residue(p, n), expected) << p << " " << n;
    }
  }
}

TEST(Giuga, OddPairs) {
  auto pairs = odd_giuga_pairs(200, 200);
  EXPECT_FALSE(pairs.empty());
  for (auto [p, m] : pairs) {
    EXPECT_TRUE(modular::is_prime(p));
    EXPECT_EQ((m - 1) % p, 0u);
    EXPECT_NE((m - 1) % (p - 1), 0u);
  }
}
