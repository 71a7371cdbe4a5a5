#include "claims.hpp"
#include "congruence/bernoulli.hpp"
#include "congruence/modular.hpp"
#include "congruence/padic.hpp"

namespace congruence::claims {

namespace {

std::string index_list(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool is_even(std::uint64_t n) { return n % 2 == 0; }

// (x)_1 for x = -1 mod p: the digit d with x = -1 + p d mod p^2.
std::uint64_t signed_digit(const ResidueModPk& x) {
  const std::uint64_t p = x.prime();
  return ((x.value() + 1) % (p * p)) / p;
}

}  // namespace

void add_bernoulli(std::vector<Claim>& out) {
  out.push_back(Claim{
      .id = "bernoulli.vsc",
      .description = "denominators of even Bernoulli numbers",
      .anchor = "von Staudt-Clausen",
      .statement = "B_n + sum_{q prime, (q-1) | n} 1/q is an integer for even n",
      .subject = SubjectKind::Integer,
      .min_subject = 2,
      .max_subject = 400,
      .precondition = "even n in [2, 400]",
      .lhs_route = "fractional part of B_n + sum 1/q",
      .rhs_route = "zero",
      .admits_extra = is_even,
      .evaluate =
          [](std::uint64_t n, const Limits&, ReportBuilder& b) {
            Rational s = bernoulli_exact(signed_of(n));
            for (std::uint64_t q = 2; q <= n + 1; ++q) {
              if (modular::is_prime(q) && n % (q - 1) == 0) s += Rational(1, signed_of(q));
            }
            BigInt r;
            mpz_fdiv_r(r.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
            b.detail("B_n", bernoulli_exact(signed_of(n)).to_string());
            b.add_exact(Rational(r, s.denominator()), Rational(0));
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.pB_minus_one",
      .description = "p B_(p-1) is -1 modulo p",
      .anchor = "von Staudt-Clausen at index p-1",
      .statement = "p B_(p-1) = -1 mod p",
      .modulus_power = 1,
      .min_subject = 3,
      .max_subject = 2'000'000,
      .precondition = "prime p >= 3",
      .lhs_route = "pB_mod",
      .rhs_route = "constant -1",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            b.add(pB_mod(signed_of(p - 1), p, 1, limits), ResidueModPk(p, 1, -1));
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.kummer",
      .description = "periodicity of B_n/n modulo p",
      .anchor = "Kummer",
      .statement = "B_(k(p-1)+b)/(k(p-1)+b) = B_b/b mod p for even b, (p-1) not dividing b",
      .modulus_power = 1,
      .min_subject = 5,
      .max_subject = 397,
      .precondition = "prime 5 <= p <= 397 (indices <= 400)",
      .lhs_route = "bernoulli_exact at the shifted index",
      .rhs_route = "bernoulli_exact at b",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t base = 2; base <= P - 3; base += 2) {
              for (std::int64_t k = 1; k <= 3; ++k) {
                const std::int64_t n = k * (P - 1) + base;
                if (n > limits.bernoulli_exact_cap) break;
                b.add(rational_mod_pk(bernoulli_exact(n) / Rational(n), p, 1),
                      rational_mod_pk(bernoulli_exact(base) / Rational(base), p, 1),
                      "b=" + std::to_string(base) + ",k=" + std::to_string(k));
              }
            }
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.sun_multiple",
      .description = "p B_(k(p-1)) from p B_(p-1) modulo p^2",
      .anchor = "Sun (2000)",
      .statement = "p B_(k(p-1)) = k p B_(p-1) - (k-1)(p-1) mod p^2 for k = 1, 2, 3",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 2'000'000,
      .precondition = "prime p >= 5",
      .lhs_route = "padic_pB(k)",
      .rhs_route = "pB_mod(p-1)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            auto b1 = pB_mod(signed_of(p - 1), p, 2, limits);
            b.detail("pB_(p-1)", b1.to_string());
            for (std::int64_t k = 1; k <= 3; ++k) {
              auto lhs = padic_pB(k, p, 2, limits).to_residue(2);
              auto rhs = ResidueModPk(p, 2, k) * b1 - ResidueModPk(p, 2, k - 1) * ResidueModPk::from_unsigned(p, 2, p - 1);
              b.add(lhs, rhs, label("k", k));
            }
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.second_digit",
      .description = "second p-adic digit of p B_(2(p-1))",
      .anchor = "p-adic digits of p B_(k(p-1))",
      .statement = "(p B_(2(p-1)))_1 = 2 (p B_(p-1))_1 - 1 mod p, where x = -1 + p (x)_1 mod p^2",
      .modulus_power = 1,
      .min_subject = 5,
      .max_subject = 2'000'000,
      .precondition = "prime p >= 5",
      .lhs_route = "pB_mod(2(p-1))",
      .rhs_route = "pB_mod(p-1)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            auto b1 = pB_mod(signed_of(2 * (p - 1)), p, 2, limits);
            auto b0 = pB_mod(signed_of(p - 1), p, 2, limits);
            b.detail("pB_(p-1)", b0.to_string());
            b.detail("pB_(2p-2)", b1.to_string());
            b.add(ResidueModPk::from_unsigned(p, 1, signed_digit(b1)),
                  ResidueModPk::from_unsigned(p, 1, signed_digit(b0)) * ResidueModPk(p, 1, 2) - ResidueModPk(p, 1, 1));
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.miki",
      .description = "Miki's convolution identity for B_n/n",
      .anchor = "Miki (1978)",
      .statement = "sum_{i=2}^{n-2} b_i b_(n-i) = sum_{i=2}^{n-2} C(n,i) b_i b_(n-i) + 2 H_n b_n, b_i = B_i/i",
      .subject = SubjectKind::Integer,
      .min_subject = 4,
      .max_subject = 400,
      .precondition = "even n in [4, 400]",
      .lhs_route = "plain convolution",
      .rhs_route = "binomial convolution plus harmonic term",
      .admits_extra = is_even,
      .evaluate =
          [](std::uint64_t un, const Limits&, ReportBuilder& b) {
            const auto n = signed_of(un);
            auto div = [](std::int64_t i) { return bernoulli_exact(i) / Rational(i); };
            Rational lhs, rhs, h;
            for (std::int64_t i = 2; i <= n - 2; ++i) {
              Rational t = div(i) * div(n - i);
              lhs += t;
              rhs += Rational(binomial(n, i)) * t;
            }
            for (std::int64_t j = 1; j <= n; ++j) h += Rational(1, j);
            rhs += Rational(2) * h * div(n);
            b.add_exact(lhs, rhs);
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.adams",
      .description = "p^l divides the numerator of B_n when p^l | n",
      .anchor = "Adams",
      .statement = "p^l | n and (p-1) not dividing n imply p^l | Numer(B_n)",
      .modulus_power = 0,
      .min_subject = 5,
      .max_subject = 199,
      .precondition = "prime 5 <= p <= 199 (even n <= 400)",
      .lhs_route = "bernoulli_exact numerator",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t n = 2 * P; n <= 400; n += 2 * P) {
              if (n % (P - 1) == 0) continue;
              const auto l = modular::valuation(static_cast<std::uint64_t>(n), p);
              b.add(ResidueModPk::from_big(p, l, bernoulli_exact(n).numerator()), ResidueModPk(p, l, 0), label("n", n));
            }
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.thangadurai",
      .description = "bounded scan of Thangadurai's valuation conjecture",
      .anchor = "Thangadurai (conjecture)",
      .statement = "beta = v_p(Numer(B_n)) <= l + 1 where l = v_p(n), p | n, (p-1) not dividing n",
      .min_subject = 5,
      .max_subject = 200,
      .precondition = "prime 5 <= p <= 200 (even n <= 400)",
      .report_only = true,
      .lhs_route = "max(beta, l+1) from bernoulli_exact",
      .rhs_route = "l + 1",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t n = 2 * P; n <= 400; n += 2 * P) {
              if (n % (P - 1) == 0) continue;
              const auto l = modular::valuation(static_cast<std::uint64_t>(n), p);
              const auto beta = valuation(bernoulli_exact(n).numerator(), p);
              b.add(std::to_string(std::max(beta, l + 1)), std::to_string(l + 1), "exact", label("n", n));
            }
          },
  });

  out.push_back(Claim{
      .id = "bernoulli.irregular",
      .description = "irregular pairs by modular sums agree with exact numerators",
      .anchor = "regular and irregular primes",
      .statement = "{m even, 2 <= m <= p-3 : S_(p-1,m)/p = 0 mod p} = {m : p | Numer(B_m)}",
      .modulus_power = 1,
      .min_subject = 5,
      .max_subject = 401,
      .precondition = "prime 5 <= p <= 401",
      .lhs_route = "irregular_pairs (modular sums)",
      .rhs_route = "bernoulli_exact numerators",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            std::vector<std::int64_t> lhs, rhs;
            for (const auto& pair : irregular_pairs(p)) lhs.push_back(pair.index);
            for (std::int64_t m = 2; m <= signed_of(p) - 3; m += 2) {
              if (big_mod(bernoulli_exact(m).numerator(), p) == 0) rhs.push_back(m);
            }
            b.add(index_list(lhs), index_list(rhs), ResidueModPk(p, 1).modulus_string());
          },
  });
}

}  // namespace congruence::claims
