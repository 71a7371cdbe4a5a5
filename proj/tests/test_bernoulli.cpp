#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/modular.hpp"

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

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "congruence_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST(Bernoulli, ExactValues) {
  EXPECT_EQ(bernoulli_exact(0), Rational(1));
  EXPECT_EQ(bernoulli_exact(1), Rational(1, 2));
  EXPECT_EQ(bernoulli_exact(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_exact(3), Rational(0));
  EXPECT_EQ(bernoulli_exact(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli_exact(12).to_string(), "-691/2730");
  EXPECT_EQ(bernoulli_classical(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_classical(12), bernoulli_exact(12));
}

TEST(Bernoulli, RecurrenceHolds) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    Rational s;
    for (std::int64_t j = 0; j <= n; ++j) s += Rational(binomial(n + 1, j)) * bernoulli_exact(j);
    EXPECT_EQ(s, Rational(n + 1)) << n;
  }
}

TEST(Bernoulli, VonStaudtClausen) {
  for (std::int64_t n = 2; n <= 120; n += 2) EXPECT_TRUE(von_staudt_clausen_holds(n)) << n;
}

TEST(Bernoulli, ModP) {
  EXPECT_EQ(bernoulli_mod_p(2, 5).value(), 1u);
  EXPECT_EQ(bernoulli_mod_p(4, 7).value(), 3u);
  EXPECT_EQ(bernoulli_mod_p(32, 37).value(), 0u);
  EXPECT_EQ(code_of([] { bernoulli_mod_p(4, 5); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { bernoulli_mod_p(3, 11); }), ErrorCode::IndexOutOfRange);
}

TEST(Bernoulli, ModPMatchesExact) {
  for (std::int64_t m = 2; m <= 60; m += 2) {
    for (auto p : modular::primes_in_range(static_cast<std::uint64_t>(m + 3), 101)) {
      EXPECT_EQ(bernoulli_mod_p(m, p), rational_mod_pk(bernoulli_exact(m), p, 1)) << m << " " << p;
    }
  }
}

// The sums-of-powers route past the exact cap agrees with the exact route.
TEST(Bernoulli, ModularRouteMatchesExact) {
  Limits modular_only;
  modular_only.bernoulli_exact_cap = 0;
  for (auto p : modular::primes_in_range(5, 47)) {
    for (std::int64_t m = 4; m <= 200; m += 2) {
      EXPECT_EQ(pB_mod(m, p, 3, modular_only), pB_mod(m, p, 3)) << m << " " << p;
    }
  }
}

TEST(Bernoulli, PadicMultiples) {
  EXPECT_EQ(padic_pB(1, 5, 1).to_residue(1).value(), 4u);
  EXPECT_EQ(padic_pB(2, 5, 2).to_residue(2).value(), 4u);
  auto zero_index = padic_pB(0, 7, 2);
  EXPECT_EQ(zero_index.valuation(), 1);
  EXPECT_EQ(zero_index.unit().value(), 1u);
  EXPECT_EQ(code_of([] { padic_pB(1, 3, 1); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { padic_pB(1, 5, 4); }), ErrorCode::PrecisionUnsupported);
}

TEST(Bernoulli, IrregularPairs) {
  EXPECT_EQ(irregular_pairs(37), (std::vector<IrregularPair>{{37, 32}}));
  EXPECT_TRUE(irregular_pairs(5).empty());
  EXPECT_EQ(irregular_pairs(59), (std::vector<IrregularPair>{{59, 44}}));
  EXPECT_EQ(irregular_pairs(691), (std::vector<IrregularPair>{{691, 12}, {691, 200}}));
  std::vector<std::uint64_t> below_100;
  for (auto p : modular::primes_in_range(5, 100)) {
    if (!irregular_pairs(p).empty()) below_100.push_back(p);
  }
  EXPECT_EQ(below_100, (std::vector<std::uint64_t>{37, 59, 67}));
}

// Numerators of B_n/n are products of irregular primes.
TEST(Bernoulli, DividedNumerators) {
  for (std::int64_t n : {2, 4, 6, 8, 10, 14}) {
    EXPECT_EQ(BigInt(abs((bernoulli_exact(n) / Rational(n)).numerator())), BigInt(1)) << n;
  }
  EXPECT_EQ((bernoulli_exact(12) / Rational(12)).numerator(), BigInt(-691));
  EXPECT_FALSE(irregular_pairs(691).empty());
}

TEST(Bernoulli, Miki) {
  EXPECT_TRUE(miki_identity_check(3));
  EXPECT_TRUE(miki_identity_check(4));
  EXPECT_TRUE(miki_identity_check(20));
}

TEST(Bernoulli, Adams) {
  EXPECT_TRUE(adams_check(10, 5, 1));
  EXPECT_TRUE(adams_check(14, 7, 1));
  EXPECT_TRUE(adams_check(50, 5, 2));
  EXPECT_EQ(code_of([] { adams_check(12, 7, 1); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { adams_check(6, 3, 1); }), ErrorCode::PreconditionViolated);
}

TEST(Bernoulli, ThangaduraiScanFindsNothingAtDeskScale) {
  EXPECT_TRUE(thangadurai_scan(400, 50).empty());
}

TEST(BernoulliTable, CacheRoundTrip) {
  auto path = temp_file("round_trip.cache");
  {
    BernoulliTable t(path);
    EXPECT_EQ(t.get(20), Rational(-174611, 330));
  }
  std::ifstream in(path);
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(first, "0 1/1");
  EXPECT_EQ(second, "1 1/2");
  BernoulliTable reloaded(path);
  EXPECT_GE(reloaded.size(), 21);
  EXPECT_EQ(reloaded.get(12), bernoulli_exact(12));
}

TEST(BernoulliTable, RejectsCorruptCache) {
  auto path = temp_file("corrupt.cache");
  {
    std::ofstream out(path);
    out << "0 1/1\n1 -1/2\n";
  }
  EXPECT_EQ(code_of([&] { BernoulliTable t(path); }), ErrorCode::CacheFormat);
  {
    std::ofstream out(path);
    out << "0 1/1\n1 1/2\n2 1/5\n";
  }
  EXPECT_EQ(code_of([&] { BernoulliTable t(path); }), ErrorCode::CacheFormat);
  {
    std::ofstream out(path);
    out << "0 1/1\n2 1/6\n";
  }
  EXPECT_EQ(code_of([&] { BernoulliTable t(path); }), ErrorCode::CacheFormat);
}
