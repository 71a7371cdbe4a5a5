#include "claims.hpp"
#include "congruence/bernoulli.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/stirling_harmonic.hpp"

namespace congruence::claims {

namespace {

constexpr std::uint64_t kRowCap = 3000;

ResidueModPk exact_row(std::uint64_t p, std::int64_t k, unsigned power, const Limits& limits) {
  return stirling_mod(p, k, StirlingMethod::Exact, power, limits);
}

Claim route_claim(StirlingMethod m, unsigned power, std::int64_t k_lo, std::int64_t k_hi_offset, std::uint64_t min_p,
                  std::uint64_t max_p, std::string description, std::string anchor, std::string statement) {
  const std::string name(to_string(m));
  return Claim{
      .id = "stirling." + name,
      .description = std::move(description),
      .anchor = std::move(anchor),
      .statement = std::move(statement),
      .modulus_power = power,
      .min_subject = min_p,
      .max_subject = max_p,
      .precondition = "prime " + std::to_string(min_p) + " <= p <= " + std::to_string(max_p),
      .lhs_route = "stirling_first",
      .rhs_route = "stirling_mod(" + name + ")",
      .evaluate =
          [=](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = k_lo; k <= P + k_hi_offset; ++k) {
              b.add(exact_row(p, k, power, limits), stirling_mod(p, k, m, power, limits), label("k", k));
            }
          },
  };
}

}  // namespace

void add_stirling(std::vector<Claim>& out) {
  out.push_back(route_claim(StirlingMethod::SumsMinusHarmonic, 2, 2, -1, 5, kRowCap,
                            "Stirling numbers as a power sum minus a harmonic number", "power sums against harmonic sums",
                            "[p, k] = S_(p-1,p-k) - H_(p-1,k-1) mod p^2 for 2 <= k <= p-1"));
  out.push_back(route_claim(StirlingMethod::BernoulliSquare, 2, 1, 0, 5, kRowCap,
                            "Stirling numbers modulo p^2 by Bernoulli numbers", "Bernoulli form of [p, k] mod p^2",
                            "[p, k] mod p^2 by parity of k: 0, -p/2, pB_(p-1) - p, 1, or (p/(2n+1)) B_(p-2n-1)"));
  out.push_back(route_claim(StirlingMethod::Glaisher, 2, 2, -1, 5, kRowCap,
                            "Glaisher's residues of A_r / p", "Glaisher (1900), A_r = [p, p-r]",
                            "A_1/p = -1/2, A_(2k+1)/p = 0, A_(2k)/p = -B_(2k)/(2k) mod p"));
  out.push_back(route_claim(StirlingMethod::BernoulliCube, 3, 1, -1, 7, 401,
                            "Stirling numbers modulo p^3 by Bernoulli numbers and their convolution",
                            "Bernoulli form of A_r mod p^3",
                            "A_r mod p^3: r odd gives (p^2/2)((2j+1)/(2j)) B_(2j); r = 2j gives "
                            "-(1/(2j))(pB_(2j) - p^2 sum_t B_(2t) B_(2j-2t)/(2t))"));

  out.push_back(Claim{
      .id = "stirling.odd_recursion",
      .description = "odd-index Glaisher numbers from their even neighbours",
      .anchor = "Glaisher numbers at odd index",
      .statement = "A_r = (p(p-r)/2) A_(r-1) mod p^3 for odd 3 <= r <= p-2",
      .modulus_power = 3,
      .min_subject = 7,
      .max_subject = kRowCap,
      .precondition = "prime 7 <= p <= 3000",
      .lhs_route = "stirling_first(p, p-r)",
      .rhs_route = "stirling_first(p, p-r+1)",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t r = 3; r <= P - 2; r += 2) {
              auto prev = ResidueModPk::from_big(p, 3, glaisher_A(p, r - 1, limits));
              auto coeff = rational_mod_pk(Rational(P * (P - r), 2), p, 3);
              b.add(ResidueModPk::from_big(p, 3, glaisher_A(p, r, limits)), coeff * prev, label("r", r));
            }
          },
  });

  out.push_back(Claim{
      .id = "stirling.odd_bernoulli",
      .description = "odd-index Glaisher numbers modulo p^3 by Bernoulli numbers",
      .anchor = "Glaisher numbers at odd index, Bernoulli form",
      .statement = "A_r = (p^2 r/(2(r-1))) B_(r-1) mod p^3 for odd 3 <= r <= p-2",
      .modulus_power = 3,
      .min_subject = 7,
      .max_subject = kRowCap,
      .precondition = "prime 7 <= p <= 3000",
      .lhs_route = "stirling_first(p, p-r)",
      .rhs_route = "bernoulli_mod_p",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t r = 3; r <= P - 2; r += 2) {
              auto bern = ResidueModPk::from_unsigned(p, 3, bernoulli_mod_p(r - 1, p).value());
              auto coeff = rational_mod_pk(Rational(P * P * r, 2 * (r - 1)), p, 3);
              b.add(ResidueModPk::from_big(p, 3, glaisher_A(p, r, limits)), coeff * bern, label("r", r));
            }
          },
  });

  out.push_back(Claim{
      .id = "stirling.sun",
      .description = "Glaisher numbers modulo p^2 by Bernoulli numbers (classical B_1)",
      .anchor = "Sun (2000)",
      .statement = "A_k = ((-1)^(k-1)/k) p B_k mod p^2 for 1 <= k <= p-1, with B_1 = -1/2",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = kRowCap,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "stirling_first(p, p-k)",
      .rhs_route = "pB_mod, bernoulli_classical",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = 1; k <= P - 1; ++k) {
              auto pb = k == 1 ? rational_mod_pk(Rational(P) * bernoulli_classical(1), p, 2) : pB_mod(k, p, 2, limits);
              auto coeff = ResidueModPk(p, 2, k % 2 == 1 ? 1 : -1) * ResidueModPk(p, 2, k).inverse();
              b.add(ResidueModPk::from_big(p, 2, glaisher_A(p, k, limits)), coeff * pb, label("k", k));
            }
          },
  });

  out.push_back(Claim{
      .id = "stirling.power_sums",
      .description = "Glaisher numbers modulo p^2 by sums of powers",
      .anchor = "power sums S_k = sum_{j<p} j^k",
      .statement = "A_k = ((-1)^(k-1)/k) S_k mod p^2 for 1 <= k <= p-1",
      .modulus_power = 2,
      .min_subject = 5,
      .max_subject = kRowCap,
      .precondition = "prime 5 <= p <= 3000",
      .lhs_route = "stirling_first(p, p-k)",
      .rhs_route = "sum_powers_mod",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            for (std::int64_t k = 1; k <= P - 1; ++k) {
              auto coeff = ResidueModPk(p, 2, k % 2 == 1 ? 1 : -1) * ResidueModPk(p, 2, k).inverse();
              b.add(ResidueModPk::from_big(p, 2, glaisher_A(p, k, limits)), coeff * sum_powers_mod(p, 2, k),
                    label("k", k));
            }
          },
  });

  out.push_back(Claim{
      .id = "stirling.newton",
      .description = "Newton's identity between Glaisher numbers and power sums",
      .anchor = "Newton's identities",
      .statement = "A_k = ((-1)^(k-1)/k)(S_k + sum_{r=1}^{k-1} (-1)^r A_r S_(k-r)) exactly",
      .min_subject = 3,
      .max_subject = 200,
      .precondition = "prime 3 <= p <= 200",
      .lhs_route = "stirling_first(p, p-k)",
      .rhs_route = "sum_powers_exact with lower A_r",
      .evaluate =
          [](std::uint64_t p, const Limits& limits, ReportBuilder& b) {
            const auto P = signed_of(p);
            std::vector<BigInt> S(static_cast<std::size_t>(P)), A(static_cast<std::size_t>(P));
            for (std::int64_t k = 1; k <= P - 1; ++k) {
              S[static_cast<std::size_t>(k)] = sum_powers_exact(P - 1, k);
              A[static_cast<std::size_t>(k)] = glaisher_A(p, k, limits);
            }
            for (std::int64_t k = 1; k <= P - 1; ++k) {
              BigInt acc = S[static_cast<std::size_t>(k)];
              for (std::int64_t r = 1; r < k; ++r) {
                BigInt t = A[static_cast<std::size_t>(r)] * S[static_cast<std::size_t>(k - r)];
                if (r % 2 == 1) acc -= t;
                else acc += t;
              }
              Rational rhs = Rational(acc) / Rational(k % 2 == 1 ? k : -k);
              b.add_exact(Rational(A[static_cast<std::size_t>(k)]), rhs, label("k", k));
            }
          },
  });
}

}  // namespace congruence::claims
