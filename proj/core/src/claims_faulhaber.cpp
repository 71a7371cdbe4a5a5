#include "claims.hpp"
#include "congruence/bernoulli.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/padic.hpp"

namespace congruence::claims {

void add_faulhaber(std::vector<Claim>& out) {
  out.push_back(Claim{
      .id = "faulhaber.jacobi",
      .description = "Jacobi's form of the odd power sums",
      .anchor = "Jacobi",
      .statement = "sum_{k<=n} k^(2l+1) = (1/(2l+2)) sum_j A_j^(l+1) u^(l+1-j), u = n(n+1), 1 <= n <= 10",
      .subject = SubjectKind::Integer,
      .min_subject = 1,
      .max_subject = 30,
      .precondition = "1 <= l <= 30",
      .lhs_route = "sum_powers_exact",
      .rhs_route = "jacobi_sum",
      .evaluate =
          [](std::uint64_t l, const Limits&, ReportBuilder& b) {
            for (std::int64_t n = 1; n <= 10; ++n) {
              b.add_exact(Rational(sum_powers_exact(n, 2 * signed_of(l) + 1)), jacobi_sum(signed_of(l), n),
                          label("n", n));
            }
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.expansion",
      .description = "Faulhaber's polynomial in the triangular number",
      .anchor = "Faulhaber",
      .statement = "sum_{k<=n} k^(2l+1) = sum_i c_i(l) a^(i+1), a = n(n+1)/2, 1 <= n <= 12",
      .subject = SubjectKind::Integer,
      .min_subject = 1,
      .max_subject = 30,
      .precondition = "1 <= l <= 30",
      .lhs_route = "sum_powers_exact",
      .rhs_route = "faulhaber_expansion",
      .evaluate =
          [](std::uint64_t l, const Limits&, ReportBuilder& b) {
            auto f = faulhaber_expansion(signed_of(l));
            for (std::int64_t n = 1; n <= 12; ++n) {
              b.add_exact(Rational(sum_powers_exact(n, f.odd_power)), f.evaluate(n), label("n", n));
            }
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.gv_vanishing",
      .description = "last Gessel-Viennot coefficient vanishes",
      .anchor = "Gessel-Viennot determinant",
      .statement = "A_l^(l+1) = 0",
      .subject = SubjectKind::Integer,
      .min_subject = 1,
      .max_subject = 40,
      .precondition = "1 <= l <= 40",
      .lhs_route = "gessel_viennot_A",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t l, const Limits&, ReportBuilder& b) {
            b.add_exact(gessel_viennot_A(signed_of(l), signed_of(l) + 1), Rational(0));
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.trailing_ratio",
      .description = "the two lowest Faulhaber coefficients",
      .anchor = "Faulhaber, trailing terms 4 alpha a^3 - alpha a^2",
      .statement = "c_2(l) = -4 c_1(l)",
      .subject = SubjectKind::Integer,
      .min_subject = 2,
      .max_subject = 40,
      .precondition = "2 <= l <= 40",
      .lhs_route = "faulhaber_coeff(2)",
      .rhs_route = "faulhaber_coeff(1)",
      .evaluate =
          [](std::uint64_t l, const Limits&, ReportBuilder& b) {
            b.add_exact(faulhaber_coeff(2, signed_of(l)), Rational(-4) * faulhaber_coeff(1, signed_of(l)));
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.trailing_bernoulli",
      .description = "trailing Faulhaber coefficient as a Bernoulli number",
      .anchor = "Faulhaber coefficient at l = (p-1)/2",
      .statement = "c_1((p-1)/2) = 2 p B_(p-1)",
      .min_subject = 3,
      .max_subject = 101,
      .precondition = "prime 3 <= p <= 101",
      .lhs_route = "faulhaber_coeff",
      .rhs_route = "bernoulli_exact",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            b.add_exact(faulhaber_coeff(1, (P - 1) / 2), Rational(2 * P) * bernoulli_exact(P - 1));
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.derby",
      .description = "Pascal-matrix coefficients of sum k^p",
      .anchor = "Derby",
      .statement = "sum_{k<p} k^p = sum_i d_i (p-1)^i and d_2 = (p/2) B_(p-1)",
      .min_subject = 3,
      .max_subject = 101,
      .precondition = "prime 3 <= p <= derby cap",
      .lhs_route = "sum_powers_exact, bernoulli_exact",
      .rhs_route = "derby_coefficients",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            auto d = derby_coefficients(p, limits);
            Rational total, power(1);
            for (const auto& di : d) {
              power *= Rational(P - 1);
              total += di * power;
            }
            b.add_exact(Rational(sum_powers_exact(P - 1, P)), total, "sum");
            b.add_exact(Rational(P, 2) * bernoulli_exact(P - 1), d.at(1), "d_2");
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.fermat_sum",
      .description = "sum of (p-1)-th powers modulo p^2",
      .anchor = "Bernoulli's formula at m = p-1",
      .statement = "sum_{k<p} k^(p-1) = p B_(p-1) mod p^2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 401,
      .precondition = "prime 5 <= p <= 401",
      .lhs_route = "sum_powers_mod",
      .rhs_route = "padic_pB",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            b.add(sum_powers_mod(p, 2, signed_of(p - 1)), padic_pB(1, p, 2, limits).to_residue(2));
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.even_sums",
      .description = "even power sums through the trailing Faulhaber coefficient",
      .anchor = "Faulhaber coefficients below (p-1)/2",
      .statement = "S_(2l) = (1/2) p c_1(l)/(2l+1) mod p^2 for 1 <= l <= (p-3)/2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 101,
      .precondition = "prime 5 <= p <= 101",
      .lhs_route = "sum_powers_mod",
      .rhs_route = "faulhaber_coeff",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t l = 1; l <= (P - 3) / 2; ++l) {
              auto rhs = Rational(P, 2) * faulhaber_coeff(1, l) / Rational(2 * l + 1);
              b.add(sum_powers_mod(p, 2, 2 * l), rational_mod_pk(rhs, p, 2), label("l", l));
            }
          },
  });

  out.push_back(Claim{
      .id = "faulhaber.p_integrality",
      .description = "Faulhaber coefficients are p-integral at l = (p-1)/2",
      .anchor = "Faulhaber coefficients at l = (p-1)/2",
      .statement = "v_p(Denom(c_i((p-1)/2))) = 0 for 1 <= i <= (p-1)/2",
      .min_subject = 3,
      .max_subject = 61,
      .precondition = "prime 3 <= p <= 61",
      .lhs_route = "faulhaber_coeff denominators",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto l = (signed_of(p) - 1) / 2;
            for (std::int64_t i = 1; i <= l; ++i) {
              b.add(std::to_string(valuation(faulhaber_coeff(i, l).denominator(), p)), "0", "exact", label("i", i));
            }
          },
  });
}

}  // namespace congruence::claims
