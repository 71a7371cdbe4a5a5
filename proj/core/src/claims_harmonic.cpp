#include "claims.hpp"
#include "congruence/bernoulli.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/stirling_harmonic.hpp"
#include "congruence/wilson.hpp"

namespace congruence::claims {

namespace {

constexpr std::uint64_t kSweepCap = 2'000'000;

ResidueModPk direct(std::uint64_t p, std::int64_t m, unsigned power) { return harmonic_sum_mod(p, m, power); }

ResidueModPk residue_sign_over(std::uint64_t p, std::int64_t k) {
  return ResidueModPk(p, 2, 1) + ResidueModPk(p, 2, k % 2 == 0 ? 1 : -1) * ResidueModPk(p, 2, k).inverse();
}

}  // namespace

void add_harmonic(std::vector<Claim>& out) {
  out.push_back(Claim{
      .id = "harmonic.glaisher_stirling",
      .description = "harmonic numbers from Glaisher numbers, with the J-dependent top rows",
      .anchor = "Glaisher (1900), harmonic sums against A_r",
      .statement = "H_m = (-1)^m m A_(p-m-1) (mod p^3 odd m, p^2 even m), m <= p-3; "
                   "H_(p-2) = -p - (J - 3/2) p^2 mod p^3; H_(p-1) = -1 - (J - 1) p mod p^2",
      .min_subject = 7,
      .max_subject = 3000,
      .precondition = "prime 7 <= p <= 3000",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "harmonic_mod(glaisher_stirling)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            b.detail("J", std::to_string(wilson_digits(p).J));
            for (std::int64_t m = 1; m <= P - 1; ++m) {
              const unsigned power = harmonic_method_power(p, m, HarmonicMethod::GlaisherStirling);
              b.add(direct(p, m, power), harmonic_mod(p, m, HarmonicMethod::GlaisherStirling, power, limits),
                    label("m", m));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.glaisher_bernoulli",
      .description = "harmonic numbers by Bernoulli numbers (p^2 even m, p^3 odd m)",
      .anchor = "Glaisher (1900), harmonic sums against Bernoulli numbers",
      .statement = "H_m = (m/(m+1)) p B_(p-1-m) mod p^2 (m even); "
                   "H_m = -(m(m+1)/(2(m+2))) p^2 B_(p-2-m) mod p^3 (m odd), m <= min(p-3, 200)",
      .min_subject = 5,
      .max_subject = kSweepCap,
      .precondition = "prime p >= 5",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "harmonic_mod(glaisher_bernoulli)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t m = 1; m <= std::min<std::int64_t>(P - 3, 200); ++m) {
              const unsigned power = harmonic_method_power(p, m, HarmonicMethod::GlaisherBernoulli);
              b.add(direct(p, m, power), harmonic_mod(p, m, HarmonicMethod::GlaisherBernoulli, power, limits),
                    label("m", m));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.power_sums",
      .description = "harmonic numbers from power sums",
      .anchor = "reflection j -> p-j in H_(p-1,p-1-k)",
      .statement = "H_(p-1,p-1-k) = (1 + (-1)^k/k) S_k mod p^2 for 1 <= k <= p-2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 3000,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "sum_powers_mod",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = 1; k <= P - 2; ++k) {
              b.add(direct(p, P - 1 - k, 2), residue_sign_over(p, k) * sum_powers_mod(p, 2, k), label("k", k));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.bernoulli_p2",
      .description = "harmonic numbers from Bernoulli numbers modulo p^2",
      .anchor = "reflection j -> p-j, Bernoulli form",
      .statement = "H_(p-1,p-1-k) = (1 + (-1)^k/k) p B_k mod p^2 for 1 <= k <= p-2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 3000,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "pB_mod",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = 1; k <= P - 2; ++k) {
              b.add(direct(p, P - 1 - k, 2), residue_sign_over(p, k) * pB_mod(k, p, 2, limits), label("k", k));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.odd_vanishing",
      .description = "odd-order harmonic numbers vanish modulo p^2",
      .anchor = "odd orders up to p-2",
      .statement = "H_(p-1,k) = 0 mod p^2 for odd 1 <= k <= p-2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 3000,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = 1; k <= P - 2; k += 2) b.add(direct(p, k, 2), ResidueModPk(p, 2, 0), label("k", k));
          },
  });

  out.push_back(Claim{
      .id = "harmonic.penultimate",
      .description = "harmonic number of order p-2 modulo p^2",
      .anchor = "order p-2 boundary",
      .statement = "H_(p-1,p-2) = 0 mod p^2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = kSweepCap,
      .precondition = "prime p >= 5",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            b.add(direct(p, signed_of(p) - 2, 2), ResidueModPk(p, 2, 0));
          },
  });

  out.push_back(Claim{
      .id = "harmonic.bayat",
      .description = "vanishing of harmonic numbers by parity of the order",
      .anchor = "Bayat (1997)",
      .statement = "H_(p-1,m) = 0 mod p^2 (m odd), mod p (m even), for p >= m+3, m <= 20",
      .min_subject = 5,
      .max_subject = 401,
      .precondition = "prime 5 <= p <= 401",
      .lhs_route = "harmonic_exact",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t m = 1; m <= std::min<std::int64_t>(20, P - 3); ++m) {
              const unsigned power = m % 2 == 1 ? 2 : 1;
              b.add(rational_mod_pk(harmonic_exact(P - 1, m, limits), p, power), ResidueModPk(p, power, 0),
                    label("m", m));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.sun",
      .description = "harmonic numbers by Bernoulli numbers (classical B_1)",
      .anchor = "Sun (2000), harmonic sums",
      .statement = "H_(p-1,k-1) = ((k-1)/k) p B_(p-k) mod p^2 for 2 <= k <= p-1, with B_1 = -1/2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = 3000,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "harmonic_mod(sun)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t m = 1; m <= P - 2; ++m) {
              b.add(direct(p, m, 2), harmonic_mod(p, m, HarmonicMethod::Sun, 2, limits), label("m", m));
            }
          },
  });

  out.push_back(Claim{
      .id = "harmonic.wolstenholme",
      .description = "Wolstenholme's theorem for the harmonic sum",
      .anchor = "Wolstenholme (1862)",
      .statement = "H_(p-1,1) = 0 mod p^2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = kSweepCap,
      .precondition = "prime p >= 5",
      .lhs_route = "harmonic_mod(exact)",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            b.add(harmonic_mod(p, 1, HarmonicMethod::Exact, 2, limits), ResidueModPk(p, 2, 0));
          },
  });

  out.push_back(Claim{
      .id = "harmonic.wolstenholme_binomial",
      .description = "Wolstenholme's theorem for the central binomial",
      .anchor = "Wolstenholme (1862), binomial form",
      .statement = "C(2p-1, p-1) = 1 mod p^3",
      .modulus_power = 3,
      .min_subject = 5,
      .max_subject = 20000,
      .precondition = "prime 5 <= p <= 20000",
      .lhs_route = "exact binomial",
      .rhs_route = "one",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            b.add(wolstenholme_binomial(p), ResidueModPk(p, 3, 1));
          },
  });

  out.push_back(Claim{
      .id = "harmonic.wolstenholme_quotient",
      .description = "Wolstenholme quotient by a Bernoulli number",
      .anchor = "Glaisher, Wolstenholme quotient",
      .statement = "W_p = (C(2p-1,p-1) - 1)/p^3 = -(2/3) B_(p-3) mod p",
      .modulus_power = 1,
      .min_subject = 7,
      .max_subject = 20000,
      .precondition = "prime 7 <= p <= 20000",
      .lhs_route = "exact binomial",
      .rhs_route = "bernoulli_mod_p",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            auto rhs = rational_mod_pk(Rational(-2, 3), p, 1) * bernoulli_mod_p(signed_of(p) - 3, p);
            b.add(wolstenholme_quotient(p), rhs);
          },
  });

  out.push_back(Claim{
      .id = "harmonic.wolstenholme_prime",
      .description = "Wolstenholme primes: H_(p-1,1) vanishing modulo p^3",
      .anchor = "Wolstenholme primes",
      .statement = "H_(p-1,1) = 0 mod p^3 (rare; 16843 is the first)",
      .modulus_power = 3,
      .min_subject = 5,
      .max_subject = kSweepCap,
      .precondition = "prime p >= 5",
      .report_only = true,
      .lhs_route = "harmonic_sum_mod",
      .rhs_route = "zero",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            b.add(direct(p, 1, 3), ResidueModPk(p, 3, 0));
          },
  });
}

}  // namespace congruence::claims
