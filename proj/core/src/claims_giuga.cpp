#include "claims.hpp"
#include "congruence/bernoulli.hpp"
#include "congruence/giuga.hpp"
#include "congruence/modular.hpp"

namespace congruence::claims {

namespace {

bool squarefree_composite(std::uint64_t n) {
  auto prof = classify(n);
  return !prof.is_prime && prof.is_squarefree;
}

std::vector<OddGiugaPair> pairs_at(std::uint64_t p) {
  std::vector<OddGiugaPair> out;
  for (const auto& pair : odd_giuga_pairs(401, p)) {
    if (pair.p == p) out.push_back(pair);
  }
  return out;
}

}  // namespace

void add_giuga(std::vector<Claim>& out) {
  out.push_back(Claim{
      .id = "giuga.squarefree_criterion",
      .description = "when n B_(n-1) vanishes modulo a squarefree composite n",
      .anchor = "Agoh-Giuga residue of squarefree composites",
      .statement = "n B_(n-1) != 0 mod n iff (p-1) | (n-1) for some prime p | n (n squarefree composite)",
      .subject = SubjectKind::Integer,
      .min_subject = 6,
      .max_subject = 400,
      .precondition = "squarefree composite 6 <= n <= 400",
      .lhs_route = "agoh_giuga_residue",
      .rhs_route = "factorization",
      .admits_extra = squarefree_composite,
      .evaluate =
          [](std::uint64_t n, const Limits& limits, ReportBuilder& b) {
            const auto residue = agoh_giuga_residue(n, limits);
            std::string witnesses;
            for (auto [p, e] : factorize(n, limits)) {
              if ((n - 1) % (p - 1) == 0) witnesses += (witnesses.empty() ? "" : ",") + std::to_string(p);
            }
            b.detail("residue", std::to_string(residue));
            b.detail("witnesses", "[" + witnesses + "]");
            b.add(residue != 0 ? "nonzero" : "zero", witnesses.empty() ? "zero" : "nonzero", std::to_string(n));
          },
  });

  out.push_back(Claim{
      .id = "giuga.prime_residue",
      .description = "p B_(n-1) modulo a prime p",
      .anchor = "von Staudt-Clausen at p",
      .statement = "p B_(n-1) = -1 mod p if (p-1) | (n-1), else 0 mod p, for 2 <= n <= 200",
      .modulus_power = 1,
      .min_subject = 3,
      .max_subject = 400,
      .precondition = "prime 3 <= p <= 400",
      .lhs_route = "bernoulli_exact",
      .rhs_route = "divisibility of n-1",
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            for (std::uint64_t n = 2; n <= 200; ++n) {
              auto rhs = ResidueModPk(p, 1, (n - 1) % (p - 1) == 0 ? -1 : 0);
              b.add(ResidueModPk::from_unsigned(p, 1, prime_multiple_residue(p, n)), rhs, label("n", signed_of(n)));
            }
          },
  });

  out.push_back(Claim{
      .id = "giuga.agoh",
      .description = "desk-scale scan of the Agoh-Giuga conjecture",
      .anchor = "Agoh-Giuga (conjecture)",
      .statement = "n B_(n-1) = -1 mod n iff n is prime",
      .subject = SubjectKind::Integer,
      .min_subject = 2,
      .max_subject = 400,
      .precondition = "2 <= n <= 400",
      .report_only = true,
      .lhs_route = "agoh_giuga_residue",
      .rhs_route = "primality test",
      .evaluate =
          [](std::uint64_t n, const Limits& limits, ReportBuilder& b) {
            const auto residue = agoh_giuga_residue(n, limits);
            b.detail("residue", std::to_string(residue));
            b.add(residue == n - 1 ? "-1" : "other", modular::is_prime(n) ? "-1" : "other", std::to_string(n));
          },
  });

  out.push_back(Claim{
      .id = "giuga.korselt",
      .description = "Carmichael numbers are Fermat pseudoprimes to every base",
      .anchor = "Korselt",
      .statement = "a^n = a mod n for Carmichael n and 2 <= a <= 50",
      .subject = SubjectKind::Integer,
      .min_subject = 3,
      .max_subject = 1'000'000,
      .precondition = "Carmichael n <= 10^6",
      .lhs_route = "modular power",
      .rhs_route = "base",
      .admits_extra = [](std::uint64_t n) { return classify(n).is_carmichael; },
      .evaluate =
          [](std::uint64_t n, const Limits&, ReportBuilder& b) {
            for (std::uint64_t a = 2; a <= 50; ++a) {
              b.add(std::to_string(modular::pow(a, n, n)), std::to_string(a % n), std::to_string(n),
                    label("a", signed_of(a)));
            }
          },
  });

  out.push_back(Claim{
      .id = "giuga.sum_form",
      .description = "Giuga numbers by the reciprocal-sum form and the divisibility form",
      .anchor = "Giuga numbers",
      .statement = "sum_{p|n} 1/p - 1/n is an integer iff p | (n/p - 1) for every p | n (n squarefree composite)",
      .subject = SubjectKind::Integer,
      .min_subject = 6,
      .max_subject = 1'000'000,
      .precondition = "squarefree composite 6 <= n <= 10^6",
      .lhs_route = "giuga_sum",
      .rhs_route = "classify",
      .admits_extra = squarefree_composite,
      .evaluate =
          [](std::uint64_t n, const Limits& limits, ReportBuilder& b) {
            const bool integral = giuga_sum(n, limits).is_integer();
            b.add(integral ? "giuga" : "not giuga", classify(n, limits).is_giuga ? "giuga" : "not giuga", "exact");
          },
  });

  out.push_back(Claim{
      .id = "giuga.odd_ingredient",
      .description = "numerator of B_(m-1) for n = p m with p | m-1 and (p-1) not dividing m-1",
      .anchor = "Kummer applied to odd squarefree n = p m",
      .statement = "p | Numer(B_(m-1)) when m odd squarefree, p | m-1 and (p-1) not dividing m-1",
      .modulus_power = 1,
      .min_subject = 5,
      .max_subject = 200,
      .precondition = "prime 5 <= p <= 200 with such an m <= 401",
      .lhs_route = "bernoulli_exact numerator",
      .rhs_route = "zero",
      .admits_extra = [](std::uint64_t p) { return !pairs_at(p).empty(); },
      .evaluate =
          [](std::uint64_t p, const Limits&, ReportBuilder& b) {
            for (const auto& pair : pairs_at(p)) {
              b.add(ResidueModPk::from_big(p, 1, bernoulli_exact(signed_of(pair.m) - 1).numerator()),
                    ResidueModPk(p, 1, 0), label("m", signed_of(pair.m)));
            }
          },
  });
}

}  // namespace congruence::claims
