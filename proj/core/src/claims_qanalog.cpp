#include <random>

#include "claims.hpp"
#include "congruence/qanalog.hpp"

namespace congruence::claims {

namespace {

using Poly = RationalPolynomial;

Poly one_minus_q() { return Poly{1, -1}; }

// (q^e - 1)^2
Poly shifted_square(std::size_t e) {
  Poly f = Poly::monomial(1, e) - Poly::constant(1);
  return f * f;
}

Claim q_claim(std::string id, std::string description, std::string anchor, std::string statement,
              std::uint64_t min_p, std::uint64_t max_p, std::string lhs, std::string rhs,
              std::function<void(std::uint64_t, const Limits&, ReportBuilder&)> evaluate) {
  return Claim{
      .id = std::move(id),
      .description = std::move(description),
      .anchor = std::move(anchor),
      .statement = std::move(statement),
      .min_subject = min_p,
      .max_subject = max_p,
      .precondition = "prime " + std::to_string(min_p) + " <= p <= " + std::to_string(max_p),
      .lhs_route = std::move(lhs),
      .rhs_route = std::move(rhs),
      .evaluate = std::move(evaluate),
  };
}

}  // namespace

void add_qanalog(std::vector<Claim>& out) {
  out.push_back(q_claim(
      "q.andrews", "q-analogue of Wolstenholme's harmonic congruence", "Andrews (1999)",
      "sum_{j<p} 1/[j]_q = ((p-1)/2)(1-q) mod [p]_q", 3, 61, "q_harmonic_mod", "closed form",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        b.add(q_harmonic_mod(p, 1, false, 1), q_reduce(Rational(P - 1, 2) * one_minus_q(), p, 1));
      }));

  out.push_back(q_claim(
      "q.shipan", "q-harmonic sums of orders one and two", "Shi and Pan (2007)",
      "sum 1/[j]_q = ((p-1)/2)(1-q) + ((p^2-1)/24)(1-q)^2 [p]_q mod [p]_q^2; "
      "sum 1/[j]_q^2 = -((p-1)(p-5)/12)(1-q)^2 mod [p]_q",
      3, 31, "q_harmonic_mod", "closed forms",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        Poly first = Rational(P - 1, 2) * one_minus_q() +
                     Rational(P * P - 1, 24) * one_minus_q().pow(2) * q_integer(P);
        b.add(q_harmonic_mod(p, 1, false, 2), q_reduce(first, p, 2), "order=1");
        b.add(q_harmonic_mod(p, 2, false, 1), q_reduce(Rational(-(P - 1) * (P - 5), 12) * one_minus_q().pow(2), p, 1),
              "order=2");
      }));

  out.push_back(q_claim(
      "q.dilcher", "q-harmonic sums of higher order by Dilcher's determinants", "Dilcher (2008)",
      "sum 1/[j]_q^k = ((-1)^(k-1)/p^k) D_k(-p)(1-q)^k and sum q^j/[j]_q^k = -(1/p^k) D~_k(p)(1-q)^k mod [p]_q, "
      "k <= 4",
      3, 17, "q_harmonic_mod", "dilcher_D",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        Rational pk(1);
        for (unsigned k = 1; k <= 4; ++k) {
          pk *= Rational(P);
          const auto K = static_cast<std::int64_t>(k);
          Rational plain = Rational(k % 2 == 1 ? 1 : -1) / pk * dilcher_D(K, -P, false);
          Rational twisted = -dilcher_D(K, P, true) / pk;
          b.add(q_harmonic_mod(p, k, false, 1), q_reduce(plain * one_minus_q().pow(k), p, 1), label("k", K));
          b.add(q_harmonic_mod(p, k, true, 1), q_reduce(twisted * one_minus_q().pow(k), p, 1), label("twisted k", K));
        }
      }));

  out.push_back(q_claim(
      "q.straub", "q-analogue of Wolstenholme's binomial congruence", "Straub (2011)",
      "C(2p,p)_q = [2]_(q^(p^2)) - ((p^2-1)/12)(q^p - 1)^2 mod [p]_q^3", 5, 17, "q_binomial", "closed form",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        const auto p2 = static_cast<std::size_t>(p * p);
        Poly rhs = Poly::constant(1) + Poly::monomial(1, p2) -
                   Rational(P * P - 1, 12) * shifted_square(static_cast<std::size_t>(p));
        b.add(q_reduce(q_binomial(2 * P, P), p, 3), q_reduce(rhs, p, 3));
      }));

  out.push_back(q_claim(
      "q.clark", "Clark's q-Lucas congruence and its cubic refinement", "Clark (1995), Straub (2011)",
      "C(np,mp)_q = C(n,m)_(q^(p^2)) mod [p]_q^2; "
      "C(np,mp)_q = C(n,m)_(q^(p^2)) - C(n,m+1) C(m+1,2) ((p^2-1)/12)(q^p-1)^2 mod [p]_q^3 (p >= 5), "
      "(n,m) in {(2,1),(3,1),(3,2)}",
      3, 13, "q_binomial", "substituted q_binomial",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        for (auto [n, m] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {3, 1}, {3, 2}}) {
          const std::string tag = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
          Poly lhs = q_binomial(n * P, m * P);
          Poly sub = q_binomial(n, m).substitute_power(static_cast<unsigned>(p * p));
          b.add(q_reduce(lhs, p, 2), q_reduce(sub, p, 2), tag);
          if (p >= 5) {
            Rational c = Rational(binomial(n, m + 1) * binomial(m + 1, 2)) * Rational(P * P - 1, 12);
            Poly rhs = sub - c * shifted_square(static_cast<std::size_t>(p));
            b.add(q_reduce(lhs, p, 3), q_reduce(rhs, p, 3), tag + " cubic");
          }
        }
      }));

  out.push_back(q_claim(
      "q.andrews_binomial", "q-analogue of Babbage's congruence", "Andrews (1999), q-binomial",
      "C(2p-1,p-1)_q = q^(p(p-1)/2) mod [p]_q^2", 3, 23, "q_binomial", "monomial",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        b.add(q_reduce(q_binomial(2 * P - 1, P - 1), p, 2),
              q_reduce(Poly::monomial(1, static_cast<std::size_t>(p * (p - 1) / 2)), p, 2));
      }));

  out.push_back(q_claim(
      "q.lucas", "binomials modulo p from base-p digits", "Lucas (1878)",
      "C(n,m) = prod C(n_i,m_i) mod p; 200 seeded random pairs n, m <= 10^4", 2, 31, "exact binomial",
      "lucas_product",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        std::mt19937_64 rng(p);
        std::uniform_int_distribution<std::uint64_t> dist(0, 10'000);
        for (int i = 0; i < 200; ++i) {
          std::uint64_t n = dist(rng), m = dist(rng);
          if (m > n) std::swap(m, n);
          b.add(ResidueModPk::from_big(p, 1, binomial(signed_of(n), signed_of(m))),
                ResidueModPk::from_unsigned(p, 1, lucas_product(n, m, p)),
                "n=" + std::to_string(n) + ",m=" + std::to_string(m));
        }
      }));

  out.push_back(q_claim(
      "q.kummer_carry", "p-adic valuation of binomials by carries", "Kummer (1852)",
      "v_p(C(n,m)) = carries when adding m and n-m in base p; 200 seeded random pairs n, m <= 10^4", 2, 31,
      "exact binomial valuation", "kummer_carries",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        std::mt19937_64 rng(p + 1);
        std::uniform_int_distribution<std::uint64_t> dist(0, 10'000);
        for (int i = 0; i < 200; ++i) {
          std::uint64_t n = dist(rng), m = dist(rng);
          if (m > n) std::swap(m, n);
          b.add(std::to_string(valuation(binomial(signed_of(n), signed_of(m)), p)),
                std::to_string(kummer_carries(n, m, p)), "exact", "n=" + std::to_string(n) + ",m=" + std::to_string(m));
        }
      }));

  out.push_back(q_claim(
      "q.helou_terjanian", "Jacobsthal-type congruence for C(np, mp)", "Helou and Terjanian (2008)",
      "C(np,mp) = C(n,m) mod p^s, s = v_p(p^3 m (n-m) C(n,m)), n <= 8", 5, 13, "exact binomial",
      "exact binomial at n, m",
      [](std::uint64_t p, const Limits&, ReportBuilder& b) {
        const auto P = signed_of(p);
        for (std::int64_t n = 1; n <= 8; ++n) {
          for (std::int64_t m = 0; m <= n; ++m) {
            const std::string tag = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
            const auto s = helou_terjanian_exponent(n, m, p);
            if (s < 0) {
              b.add_exact(Rational(binomial(n * P, m * P)), Rational(binomial(n, m)), tag);
            } else {
              const auto power = static_cast<unsigned>(s);
              b.add(ResidueModPk::from_big(p, power, binomial(n * P, m * P)),
                    ResidueModPk::from_big(p, power, binomial(n, m)), tag);
            }
          }
        }
      }));
}

}  // namespace congruence::claims
