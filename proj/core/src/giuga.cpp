#include "congruence/giuga.hpp"

#include <numeric>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/residue.hpp"

namespace congruence {

namespace md = modular;

Factorization factorize(std::uint64_t n, const Limits& limits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize(0)");
  if (n > static_cast<std::uint64_t>(limits.factorization_cap)) {
    throw Error(ErrorCode::FactorizationFailed, std::to_string(n) + " above factorization cap " +
                                                    std::to_string(limits.factorization_cap));
  }
  Factorization out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

CompositeProfile classify(std::uint64_t n, const Limits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "classify needs n >= 2");
  CompositeProfile prof{n, factorize(n, limits), false, true, {}, false, false};
  prof.is_prime = prof.prime_factors.size() == 1 && prof.prime_factors[0].second == 1;
  bool korselt = true, giuga = true;
  for (auto [p, e] : prof.prime_factors) {
    if (e > 1) prof.is_squarefree = false;
    const std::uint64_t u = n / p;
    if ((u - 1) % (p - 1) == 0) prof.carmichael_at.push_back(p);
    if ((n - 1) % (p - 1) != 0) korselt = false;
    if ((u - 1) % p != 0) giuga = false;
  }
  const bool sq_composite = !prof.is_prime && prof.is_squarefree;
  prof.is_carmichael = sq_composite && korselt;
  prof.is_giuga = sq_composite && giuga;
  return prof;
}

Rational giuga_sum(std::uint64_t n, const Limits& limits) {
  auto f = factorize(n, limits);
  Rational sum;
  for (auto [p, e] : f) {
    if (e > 1) throw Error(ErrorCode::NotSquarefree, std::to_string(n) + " is divisible by " + std::to_string(p) + "^2");
    sum += Rational(1, static_cast<std::int64_t>(p));
  }
  return sum - Rational(1, static_cast<std::int64_t>(n));
}

std::uint64_t agoh_giuga_residue(std::uint64_t n, const Limits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n >= 2");
  if (static_cast<std::int64_t>(n) - 1 > limits.bernoulli_exact_cap) {
    throw Error(ErrorCode::RangeExceeded, "B_" + std::to_string(n - 1) + " past exact cap");
  }
  Rational x = Rational(static_cast<std::int64_t>(n)) * bernoulli_exact(static_cast<std::int64_t>(n) - 1);
  const std::uint64_t den = big_mod(x.denominator(), n);
  if (std::gcd(den, n) != 1) {
    throw Error(ErrorCode::DenominatorNotInvertible, x.to_string() + " mod " + std::to_string(n));
  }
  return md::mul(big_mod(x.numerator(), n), md::inverse(den, n), n);
}

CompositeKind parse_composite_kind(std::string_view name) {
  if (name == "carmichael") return CompositeKind::Carmichael;
  if (name == "giuga") return CompositeKind::Giuga;
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + std::string(name) + "'");
}

std::vector<std::uint64_t> enumerate(CompositeKind kind, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 4) return out;
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  for (std::uint64_t n = 4; n <= limit; ++n) {
    if (spf[n] == n) continue;
    if (kind == CompositeKind::Carmichael && n % 2 == 0) continue;
    bool ok = true;
    unsigned factors = 0;
    for (std::uint64_t rest = n; rest > 1 && ok;) {
      const std::uint64_t p = spf[rest];
      rest /= p;
      if (rest % p == 0) ok = false;
      ++factors;
      if (kind == CompositeKind::Carmichael) ok = ok && (n - 1) % (p - 1) == 0;
      else ok = ok && (n / p - 1) % p == 0;
    }
    if (ok && kind == CompositeKind::Carmichael && factors < 3) ok = false;
    if (ok) out.push_back(n);
  }
  return out;
}

bool fermat_holds(std::uint64_t n, std::uint64_t a) { return md::pow(a, n, n) == a % n; }

bool squarefree_criterion_holds(std::uint64_t n, const Limits& limits) {
  auto prof = classify(n, limits);
  if (prof.is_prime || !prof.is_squarefree) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(n) + " is not a squarefree composite");
  }
  const bool nonzero = agoh_giuga_residue(n, limits) != 0;
  bool some = false;
  for (auto [p, e] : prof.prime_factors) some = some || (n - 1) % (p - 1) == 0;
  return nonzero == some;
}

std::uint64_t prime_multiple_residue(std::uint64_t p, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n >= 2");
  return rational_mod_pk(Rational(static_cast<std::int64_t>(p)) * bernoulli_exact(static_cast<std::int64_t>(n) - 1), p, 1)
      .value();
}

std::vector<OddGiugaPair> odd_giuga_pairs(std::uint64_t max_m, std::uint64_t max_p) {
  std::vector<OddGiugaPair> out;
  for (auto p : md::primes_in_range(3, max_p)) {
    for (std::uint64_t m = p + 1; m <= max_m; m += p) {
      // m = 1 mod p
      if (m % 2 == 0 || (m - 1) % (p - 1) == 0) continue;
      auto f = factorize(m);
      bool ok = true;
      for (auto [q, e] : f) ok = ok && e == 1 && q != p;
      if (ok) out.push_back({p, m});
    }
  }
  return out;
}

}  // namespace congruence
