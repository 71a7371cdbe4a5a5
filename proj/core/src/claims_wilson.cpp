#include "claims.hpp"
#include "congruence/wilson.hpp"

namespace congruence::claims {

namespace {

Claim wilson_route(WilsonMethod m, std::string description, std::string anchor, std::string statement,
                   std::uint64_t max_p) {
  const unsigned power = wilson_method_power(m);
  return Claim{
      .id = "wilson." + std::string(to_string(m)),
      .description = std::move(description),
      .anchor = std::move(anchor),
      .statement = std::move(statement),
      .modulus_power = power,
      .subject = SubjectKind::Prime,
      .min_subject = 5,
      .max_subject = max_p,
      .precondition = "prime p >= 5",
      .lhs_route = "factorial_mod_pk",
      .rhs_route = "wilson_predict(" + std::string(to_string(m)) + ")",
      .evaluate =
          [m, power](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            auto direct = factorial_mod_pk(p, power);
            auto predicted = wilson_predict(p, m, limits);
            auto d = wilson_digits(p);
            b.detail("J", std::to_string(d.J));
            b.detail("third_digit", std::to_string(d.third_digit));
            b.add(direct, predicted);
          },
  };
}

}  // namespace

void add_wilson(std::vector<Claim>& out) {
  constexpr std::uint64_t kCubeMax = 2'000'000;
  out.push_back(wilson_route(WilsonMethod::FermatQuotient, "Wilson mod p^2 from Fermat quotient digits",
                             "root lifting of X^(p-1) + (p-1)!", "(p-1)! = -1 + p * sum_k delta0(k) mod p^2",
                             kCubeMax));
  out.push_back(wilson_route(WilsonMethod::FaulhaberTrailing, "Wilson mod p^2 from the trailing Faulhaber coefficient",
                             "Faulhaber polynomial of sum k^p", "(p-1)! = c_1((p-1)/2)/2 - p mod p^2", 20'000));
  out.push_back(wilson_route(WilsonMethod::Glaisher, "Wilson mod p^2 from B_(p-1)", "Glaisher (1900)",
                             "(p-1)! = p B_(p-1) - p mod p^2", kCubeMax));
  out.push_back(wilson_route(WilsonMethod::PowerSums, "Wilson mod p^3 from sums of powers",
                             "power sums S_1 = sum k^(p-1), S_2 = sum k^(2(p-1))",
                             "(p-1)! = -1 - (S_1^2 + S_2)/2 + (2p+1) S_1 - (p-1)(3p/2 + 1) mod p^3", kCubeMax));
  out.push_back(wilson_route(WilsonMethod::FermatDigits, "Wilson mod p^3 from delta0 and delta1",
                             "Fermat quotient digits to second order",
                             "(p-1)! = -1 + p s0 + p^2 sum(d0 + d1) - (p^2/2)(s0^2 + sum d0^2) mod p^3", kCubeMax));
  out.push_back(wilson_route(WilsonMethod::BernoulliCubic, "Wilson mod p^3 from B_(p-1) and B_(2p-2)",
                             "Bernoulli form of the cubic Wilson congruence",
                             "(p-1)! = p/2 - 3p^2/2 + (2p+1) b1 - b2/2 - b1^2/2, b1 = pB_(p-1), b2 = pB_(2p-2) mod p^3",
                             kCubeMax));
  out.push_back(wilson_route(WilsonMethod::Sun, "Wilson mod p^3 by Sun's formula", "Sun (2000)",
                             "(p-1)! = -b1/(p-1) + b2/(2(p-1)) - (b1/(p-1))^2/2 mod p^3", kCubeMax));
  out.push_back(wilson_route(WilsonMethod::SunExpanded, "Sun's formula with (p-1)^-1 expanded",
                             "Sun (2000), inverse expanded",
                             "(p-1)! = -2p^2 - ((p+1)/2) b2 + (p+1) b1 - ((2p+1)/2) b1^2 mod p^3", kCubeMax));

  out.push_back(Claim{
      .id = "wilson.inverse_p_minus_1",
      .description = "inverse of p-1 modulo p^3",
      .anchor = "geometric series",
      .statement = "(p-1)^(-1) = -p^2 - p - 1 mod p^3",
      .modulus_power = 3,
      .min_subject = 3,
      .max_subject = kCubeMax,
      .precondition = "prime p >= 3",
      .lhs_route = "extended Euclid",
      .rhs_route = "closed form",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            auto lhs = ResidueModPk::from_unsigned(p, 3, p - 1).inverse();
            ResidueModPk P = ResidueModPk::from_unsigned(p, 3, p);
            b.add(lhs, -(P * P) - P - ResidueModPk(p, 3, 1));
          },
  });

  out.push_back(Claim{
      .id = "wilson.lift_first_digit",
      .description = "first lifted digit of every root of X^(p-1) + (p-1)!",
      .anchor = "Hensel lifting, first digit",
      .statement = "p t_k = k (1 + (p-1)! + p delta0(k)) mod p^2 for 1 <= k <= p-1",
      .modulus_power = 1,
      .min_subject = 3,
      .max_subject = 5000,
      .precondition = "prime p >= 3",
      .lhs_route = "hensel_root",
      .rhs_route = "first_digit_closed_form",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            for (std::uint64_t k = 1; k < p; ++k) {
              auto lift = hensel_root(signed_of(k), p, 2);
              b.add(ResidueModPk::from_unsigned(p, 1, lift.digits[1]),
                    ResidueModPk::from_unsigned(p, 1, first_digit_closed_form(k, p)), label("k", signed_of(k)));
            }
          },
  });

  out.push_back(Claim{
      .id = "wilson.lift_second_digit",
      .description = "second lifted digit measured from the first-order offset",
      .anchor = "Hensel lifting, second digit",
      .statement = "t_k^(1) = k (d0 + d1 + s^2 + (1 + d0) s) mod p, s = sum_k delta0(k)",
      .modulus_power = 1,
      .min_subject = 3,
      .max_subject = 2000,
      .precondition = "prime p >= 3",
      .lhs_route = "hensel_root",
      .rhs_route = "second_digit_closed_form",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            for (std::uint64_t k = 1; k < p; ++k) {
              auto lift = hensel_root(signed_of(k), p, 3);
              b.add(ResidueModPk::from_unsigned(p, 1, lift_second_offset(lift)),
                    ResidueModPk::from_unsigned(p, 1, second_digit_closed_form(k, p)), label("k", signed_of(k)));
            }
          },
  });

  out.push_back(Claim{
      .id = "wilson.root_product",
      .description = "constant coefficient of g from its lifted roots",
      .anchor = "Vieta on X^(p-1) + (p-1)!",
      .statement = "prod_k x_k = (p-1)! mod p^3",
      .modulus_power = 3,
      .min_subject = 3,
      .max_subject = 5000,
      .precondition = "prime p >= 3",
      .lhs_route = "hensel_root",
      .rhs_route = "factorial_mod_pk",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            ResidueModPk prod(p, 3, 1);
            for (std::uint64_t k = 1; k < p; ++k) prod *= hensel_root(signed_of(k), p, 3).value();
            b.add(prod, factorial_mod_pk(p, 3));
          },
  });
}

}  // namespace congruence::claims
