#include <gtest/gtest.h>

#include <random>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/padic.hpp"
#include "congruence/polynomial.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

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

TEST(Modular, BasicOperations) {
  EXPECT_EQ(modular::pow(2, 10, 1000), 24u);
  EXPECT_EQ(modular::inverse(3, 7), 5u);
  EXPECT_EQ(modular::reduce(-1, 25), 24u);
  EXPECT_EQ(modular::prime_power(5, 3), 125u);
  EXPECT_EQ(modular::valuation(250, 5), 3u);
  EXPECT_EQ(modular::power_sum(4, 4, 25), 4u);
  EXPECT_EQ(code_of([] { modular::prime_power(2, 63); }), ErrorCode::RangeExceeded);
}

TEST(Modular, PrimesInRange) {
  std::vector<std::uint64_t> expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  EXPECT_EQ(modular::primes_in_range(0, 30), expected);
  EXPECT_TRUE(modular::is_prime(16843));
  EXPECT_FALSE(modular::is_prime(561));
  EXPECT_TRUE(modular::primes_in_range(24, 28).empty());
}

TEST(Modular, BatchInverseMatchesSingle) {
  std::vector<std::uint64_t> v{1, 2, 3, 4, 5, 6, 12, 24, 100};
  auto inv = modular::batch_inverse(v, 343);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(inv[i], modular::inverse(v[i], 343));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational(0).to_string(), "0");
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Rational::parse("x"); }), ErrorCode::InvalidArgument);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Rational, Binomials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(generalized_binomial(-4, 2), 10);
  EXPECT_EQ(generalized_binomial(-6, 3), -56);
  EXPECT_EQ(valuation(BigInt(250), 5), 3u);
}

TEST(Residue, ConstructionAndArithmetic) {
  ResidueModPk a(5, 2, -1);
  EXPECT_EQ(a.value(), 24u);
  EXPECT_EQ(a.modulus_string(), "5^2");
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_EQ((a + ResidueModPk(5, 2, 3)).value(), 2u);
  EXPECT_EQ(ResidueModPk(5, 3, 6).inverse().value(), 21u);
  EXPECT_EQ(ResidueModPk(7, 3, 64).digit(1), 2u);
  EXPECT_EQ(ResidueModPk(7, 3, 64).reduce_to(1).value(), 1u);
  EXPECT_EQ(code_of([] { ResidueModPk(6, 1, 1); }), ErrorCode::NotPrime);
}

TEST(Residue, Errors) {
  EXPECT_EQ(code_of([] { return ResidueModPk(5, 2, 1) + ResidueModPk(5, 3, 1); }), ErrorCode::ModulusMismatch);
  EXPECT_EQ(code_of([] { return ResidueModPk(5, 2, 1) * ResidueModPk(7, 2, 1); }), ErrorCode::ModulusMismatch);
  EXPECT_EQ(code_of([] { return ResidueModPk(5, 2, 10).inverse(); }), ErrorCode::NonUnit);
  EXPECT_EQ(code_of([] { return rational_mod_pk(Rational(1, 5), 5, 2); }), ErrorCode::DenominatorNotInvertible);
  EXPECT_EQ(code_of([] { return ResidueModPk(2'097'169, 3, 1); }), ErrorCode::RangeExceeded);
}

TEST(Residue, RationalReduction) {
  EXPECT_EQ(rational_mod_pk(Rational(-1, 6), 5, 2).value(), 4u);
  EXPECT_EQ(rational_mod_pk(Rational(-31, 6), 5, 2).value(), 24u);
  EXPECT_EQ(rational_mod_pk(Rational(1, 6), 7, 1).value(), 6u);
  EXPECT_EQ(big_mod(BigInt(-1), 25), 24u);
}

// Reduction mod p^k is a ring homomorphism on p-integral rationals.
TEST(Residue, ReductionIsRingHomomorphism) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 10'000);
  for (std::uint64_t p : {5ULL, 7ULL, 101ULL, 65537ULL}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (int i = 0; i < 200; ++i) {
        std::int64_t da = den(rng), db = den(rng);
        while (da % static_cast<std::int64_t>(p) == 0) ++da;
        while (db % static_cast<std::int64_t>(p) == 0) ++db;
        Rational x(num(rng), da), y(num(rng), db);
        auto rx = rational_mod_pk(x, p, k), ry = rational_mod_pk(y, p, k);
        EXPECT_EQ(rational_mod_pk(x + y, p, k), rx + ry);
        EXPECT_EQ(rational_mod_pk(x * y, p, k), rx * ry);
        EXPECT_EQ(rational_mod_pk(x - y, p, k), rx - ry);
        EXPECT_EQ(rational_mod_pk(-x, p, k), -rx);
      }
    }
  }
}

TEST(Padic, OfRational) {
  auto v = padic_of_rational(Rational(50, 3), 5, 2);
  EXPECT_EQ(v.valuation(), 2);
  EXPECT_EQ(v.unit().value(), 9u);
  EXPECT_EQ(v.to_residue(3).value(), 100u);
  EXPECT_EQ(v.to_residue(4).value(), 225u);
  EXPECT_EQ(code_of([&] { v.to_residue(5); }), ErrorCode::PrecisionUnsupported);
  auto z = padic_of_rational(Rational(0), 7, 2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.valuation_at_least(100));
  EXPECT_EQ(code_of([&] { z.valuation(); }), ErrorCode::InvalidArgument);
  auto neg = padic_of_rational(Rational(1, 10), 5, 1);
  EXPECT_EQ(neg.valuation(), -1);
}

TEST(Polynomial, Arithmetic) {
  RationalPolynomial a{1, 1}, b{1, -1};
  EXPECT_EQ(a * b, (RationalPolynomial{1, 0, -1}));
  EXPECT_EQ((a * b).to_string(), "[1,0,-1]");
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(RationalPolynomial().to_string(), "[]");
  auto [q, r] = RationalPolynomial{1, 0, 0, 1}.divmod(a);
  EXPECT_EQ(q, (RationalPolynomial{1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(RationalPolynomial({1, 2, 3}).substitute_power(2), (RationalPolynomial{1, 0, 2, 0, 3}));
  EXPECT_EQ(RationalPolynomial({1, 2, 3}).evaluate(Rational(2)), Rational(17));
  EXPECT_EQ(code_of([&] { return a.divmod(RationalPolynomial()); }), ErrorCode::InvalidArgument);
}

TEST(Polynomial, InverseNotCoprime) {
  EXPECT_EQ(code_of([] { return poly_inverse_mod(RationalPolynomial{1, 1}, RationalPolynomial{1, 0, -1}); }),
            ErrorCode::NotCoprime);
}

// f * f^{-1} = 1 mod [p]_q for random f of degree <= 8 not divisible by [p]_q.
TEST(Polynomial, InverseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto m = q_integer(p);
    for (int i = 0; i < 40; ++i) {
      std::vector<Rational> c;
      for (int j = 0, d = deg(rng); j <= d; ++j) c.emplace_back(coef(rng), 1 + (j % 3));
      RationalPolynomial f(c);
      if ((f % m).is_zero()) continue;
      auto g = poly_inverse_mod(f, m);
      EXPECT_LT(g.degree(), m.degree());
      EXPECT_EQ((f * g) % m, RationalPolynomial::constant(1)) << f.to_string();
    }
  }
}
