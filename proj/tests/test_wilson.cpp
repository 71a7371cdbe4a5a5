#include <gtest/gtest.h>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/wilson.hpp"

using namespace congruence;

TEST(Wilson, FactorialResidues) {
  EXPECT_EQ(factorial_mod_pk(5, 2).value(), 24u);
  EXPECT_EQ(factorial_mod_pk(7, 3).value(), 720u % 343u);
  auto d5 = wilson_digits(5);
  EXPECT_EQ(d5.J, 0u);
  EXPECT_EQ(d5.third_digit, 1u);
  auto d7 = wilson_digits(7);
  EXPECT_EQ(d7.J, 5u);
  EXPECT_EQ(d7.third_digit, 0u);
}

TEST(Wilson, FermatDigits) {
  EXPECT_EQ(delta0(2, 5), 3u);  // 16 = 1 + 5*3
  EXPECT_EQ(delta0(2, 7), 2u);  // 64 = 1 + 7*9
  EXPECT_EQ(delta1(2, 7), 1u);  // 64 = 1 + 2*7 + 1*49
}

TEST(Wilson, WilsonPrimes) {
  EXPECT_EQ(wilson_primes(1000), (std::vector<std::uint64_t>{5, 13, 563}));
}

TEST(Wilson, EveryRouteMatchesDirectProduct) {
  for (auto name : {"fermat_quotient", "faulhaber_trailing", "glaisher", "power_sums", "fermat_digits",
                    "bernoulli_cubic", "sun", "sun_expanded"}) {
    auto method = parse_wilson_method(name);
    EXPECT_EQ(to_string(method), name);
    unsigned power = wilson_method_power(method);
    for (auto p : modular::primes_in_range(7, 200)) {
      EXPECT_EQ(wilson_predict(p, method), factorial_mod_pk(p, power)) << name << " " << p;
    }
  }
  EXPECT_THROW(parse_wilson_method("nope"), Error);
}

TEST(Wilson, RootLifts) {
  for (auto p : modular::primes_in_range(5, 60)) {
    auto fact = factorial_mod_pk(p, 3);
    for (const auto& lift : all_root_lifts(p, 3)) {
      ASSERT_EQ(lift.precision(), 3u);
      auto x = lift.value();
      EXPECT_EQ(x.reduce_to(1).value(), lift.base);
      EXPECT_TRUE((x.pow(p - 1) + fact).is_zero()) << p << " " << lift.base;
      EXPECT_EQ(lift.digits[1], first_digit_closed_form(lift.base, p));
    }
  }
  try {
    hensel_root(7, 7, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnit);
  }
}
