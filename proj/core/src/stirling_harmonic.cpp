#include "congruence/stirling_harmonic.hpp"

#include <array>
#include <mutex>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/modular.hpp"
#include "congruence/wilson.hpp"

namespace congruence {

namespace md = modular;

StirlingTable& StirlingTable::shared() {
  static StirlingTable table;
  return table;
}

const std::vector<BigInt>& StirlingTable::row(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Stirling row");
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(mutex_);
    if (idx < rows_.size()) return rows_[idx];
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= idx) {
    const auto& prev = rows_.back();
    const auto m = static_cast<long>(rows_.size() - 1);
    std::vector<BigInt> next(prev.size() + 1);
    for (std::size_t s = 0; s < prev.size(); ++s) {
      next[s + 1] += prev[s];
      next[s] += prev[s] * m;
    }
    rows_.push_back(std::move(next));
  }
  return rows_[idx];
}

BigInt stirling_first(std::int64_t n, std::int64_t s, const Limits& limits) {
  if (n > limits.stirling_cap) {
    throw Error(ErrorCode::CapExceeded, "n=" + std::to_string(n) + " above stirling cap " +
                                            std::to_string(limits.stirling_cap));
  }
  if (n < 0 || s < 0 || s > n) {
    throw Error(ErrorCode::IndexOutOfRange, "need 0 <= s <= n, got n=" + std::to_string(n) + ", s=" + std::to_string(s));
  }
  return StirlingTable::shared().row(n)[static_cast<std::size_t>(s)];
}

BigInt glaisher_A(std::uint64_t p, std::int64_t r, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  return stirling_first(ip, ip - r, limits);
}

Rational harmonic_exact(std::int64_t n, std::int64_t m, const Limits& limits) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1, m >= 1");
  if (n > limits.harmonic_cap) {
    throw Error(ErrorCode::CapExceeded, "n=" + std::to_string(n) + " above harmonic cap " +
                                            std::to_string(limits.harmonic_cap));
  }
  BigInt lcm = 1;
  for (std::int64_t j = 2; j <= n; ++j) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(j));
  BigInt num = 0, term;
  for (std::int64_t j = 1; j <= n; ++j) {
    BigInt base = lcm / static_cast<long>(j);
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
    num += term;
  }
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(num, den);
}

ResidueModPk harmonic_sum_mod(std::uint64_t p, std::int64_t m, unsigned power) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  ResidueModPk acc(p, power, 0);
  const std::uint64_t mod = acc.modulus();
  std::vector<std::uint64_t> values(p - 1);
  for (std::uint64_t j = 1; j < p; ++j) values[j - 1] = j;
  auto inverses = md::batch_inverse(values, mod);
  std::uint64_t sum = 0;
  for (auto inv : inverses) sum = md::add(sum, md::pow(inv, static_cast<std::uint64_t>(m), mod), mod);
  return ResidueModPk::from_unsigned(p, power, sum);
}

namespace {

constexpr std::array<std::pair<StirlingMethod, std::string_view>, 5> kStirlingNames{{
    {StirlingMethod::Exact, "exact"},
    {StirlingMethod::SumsMinusHarmonic, "sums_minus_harmonic"},
    {StirlingMethod::BernoulliSquare, "bernoulli_p2"},
    {StirlingMethod::BernoulliCube, "bernoulli_p3"},
    {StirlingMethod::Glaisher, "glaisher"},
}};

constexpr std::array<std::pair<HarmonicMethod, std::string_view>, 6> kHarmonicNames{{
    {HarmonicMethod::Exact, "exact"},
    {HarmonicMethod::GlaisherStirling, "glaisher_stirling"},
    {HarmonicMethod::GlaisherBernoulli, "glaisher_bernoulli"},
    {HarmonicMethod::PowerSums, "power_sums"},
    {HarmonicMethod::BernoulliSquare, "bernoulli_p2"},
    {HarmonicMethod::Sun, "sun"},
}};

ResidueModPk rp(std::uint64_t p, unsigned k, std::int64_t v) { return ResidueModPk(p, k, v); }

void require_prime(std::uint64_t p, std::uint64_t min) {
  if (p < min || !md::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p >= " + std::to_string(min) + " prime, got " + std::to_string(p));
  }
}

void require_power(unsigned power, unsigned max, std::string_view route) {
  if (power == 0 || power > max) {
    throw Error(ErrorCode::PreconditionViolated, std::string(route) + " determines the value mod p^" +
                                                     std::to_string(max) + " only, asked p^" + std::to_string(power));
  }
}

void require_index(bool ok, std::string_view route, std::string_view what, std::int64_t k) {
  if (!ok) {
    throw Error(ErrorCode::IndexUnsupported, std::string(route) + ": index " + std::to_string(k) + " outside " +
                                                 std::string(what));
  }
}

ResidueModPk stirling_sums_minus_harmonic(std::uint64_t p, std::int64_t k) {
  const auto ip = static_cast<std::int64_t>(p);
  return sum_powers_mod(p, 2, ip - k) - harmonic_sum_mod(p, k - 1, 2);
}

ResidueModPk stirling_bernoulli_square(std::uint64_t p, std::int64_t k, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  if (k % 2 == 0) {
    const std::int64_t n = (k - 2) / 2;
    if (2 * n + 1 <= ip - 4) return rp(p, 2, 0);
    return rp(p, 2, -ip) * rp(p, 2, 2).inverse();  // 2n+1 = p-2
  }
  const std::int64_t n = (k - 1) / 2;
  if (n == 0) return pB_mod(ip - 1, p, 2, limits) - rp(p, 2, ip);
  if (2 * n + 1 == ip) return rp(p, 2, 1);
  // (p/(2n+1)) B_{p-2n-1}
  ResidueModPk b = bernoulli_mod_p(ip - 2 * n - 1, p);
  return rp(p, 2, ip) * rp(p, 2, static_cast<std::int64_t>(b.value())) * rp(p, 2, 2 * n + 1).inverse();
}

Rational bernoulli_cube_value(std::uint64_t p, std::int64_t r) {
  const auto ip = static_cast<std::int64_t>(p);
  const Rational P(ip);
  if (r == 1) return Rational(ip * (ip - 1), 2);
  if (r == 2) return Rational(1, 2) * (-P / Rational(6) + Rational(3) * P * P / Rational(4));
  if (r % 2 == 1) {
    const std::int64_t j = (r - 1) / 2;
    return P * P / Rational(2) * Rational(2 * j + 1, 2 * j) * bernoulli_exact(2 * j);
  }
  const std::int64_t j = r / 2;
  Rational conv;
  for (std::int64_t t = 1; t <= j - 1; ++t) {
    conv += bernoulli_exact(2 * t) * bernoulli_exact(2 * j - 2 * t) / Rational(2 * t);
  }
  return -Rational(1, 2 * j) * (P * bernoulli_exact(2 * j) - P * P * conv);
}

// A_r = p * (A_r / p) with A_r / p known mod p.
ResidueModPk stirling_glaisher(std::uint64_t p, std::int64_t r) {
  ResidueModPk over_p = rp(p, 1, 0);
  if (r == 1) {
    over_p = -rp(p, 1, 2).inverse();
  } else if (r % 2 == 0) {
    over_p = -bernoulli_mod_p(r, p) * rp(p, 1, r).inverse();
  }
  return ResidueModPk::from_unsigned(p, 2, p * over_p.value());
}

}  // namespace

std::string_view to_string(StirlingMethod m) {
  for (const auto& [method, name] : kStirlingNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::string_view to_string(HarmonicMethod m) {
  for (const auto& [method, name] : kHarmonicNames) {
    if (method == m) return name;
  }
  return "unknown";
}

StirlingMethod parse_stirling_method(std::string_view name) {
  for (const auto& [method, n] : kStirlingNames) {
    if (n == name) return method;
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown Stirling method '" + std::string(name) + "'");
}

HarmonicMethod parse_harmonic_method(std::string_view name) {
  for (const auto& [method, n] : kHarmonicNames) {
    if (n == name) return method;
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown harmonic method '" + std::string(name) + "'");
}

ResidueModPk stirling_mod(std::uint64_t p, std::int64_t k, StirlingMethod method, unsigned power,
                          const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  const auto name = to_string(method);
  switch (method) {
    case StirlingMethod::Exact:
      require_prime(p, 2);
      require_power(power, 4, name);
      return ResidueModPk::from_big(p, power, stirling_first(ip, k, limits));
    case StirlingMethod::SumsMinusHarmonic:
      require_prime(p, 5);
      require_power(power, 2, name);
      require_index(k >= 2 && k <= ip - 1, name, "[2, p-1]", k);
      return stirling_sums_minus_harmonic(p, k).reduce_to(power);
    case StirlingMethod::BernoulliSquare:
      require_prime(p, 5);
      require_power(power, 2, name);
      require_index(k >= 1 && k <= ip, name, "[1, p]", k);
      return stirling_bernoulli_square(p, k, limits).reduce_to(power);
    case StirlingMethod::BernoulliCube: {
      require_prime(p, 5);
      require_power(power, 3, name);
      require_index(k >= 1 && k <= ip - 1, name, "[1, p-1]", k);
      return rational_mod_pk(bernoulli_cube_value(p, ip - k), p, 3).reduce_to(power);
    }
    case StirlingMethod::Glaisher:
      require_prime(p, 5);
      require_power(power, 2, name);
      require_index(k >= 2 && k <= ip - 1, name, "[2, p-1]", k);
      return stirling_glaisher(p, ip - k).reduce_to(power);
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown method");
}

unsigned harmonic_method_power(std::uint64_t p, std::int64_t m, HarmonicMethod method) {
  const auto ip = static_cast<std::int64_t>(p);
  switch (method) {
    case HarmonicMethod::Exact: return 4;
    case HarmonicMethod::GlaisherStirling:
      if (m == ip - 1) return 2;
      if (m == ip - 2) return 3;
      return m % 2 == 1 ? 3 : 2;
    case HarmonicMethod::GlaisherBernoulli: return m % 2 == 1 ? 3 : 2;
    default: return 2;
  }
}

ResidueModPk harmonic_mod(std::uint64_t p, std::int64_t m, HarmonicMethod method, unsigned power,
                          const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  const auto name = to_string(method);
  if (method != HarmonicMethod::Exact) require_prime(p, 5);
  else require_prime(p, 2);
  require_power(power, harmonic_method_power(p, m, method), name);
  switch (method) {
    case HarmonicMethod::Exact:
      require_index(m >= 1, name, "m >= 1", m);
      if (ip - 1 > limits.harmonic_cap) return harmonic_sum_mod(p, m, power);
      return rational_mod_pk(harmonic_exact(ip - 1, m, limits), p, power);
    case HarmonicMethod::GlaisherStirling: {
      if (p < 7) throw Error(ErrorCode::PreconditionViolated, "glaisher_stirling needs p >= 7");
      require_index(m >= 1 && m <= ip - 1, name, "[1, p-1]", m);
      const std::uint64_t J = wilson_digits(p).J;
      const auto iJ = static_cast<std::int64_t>(J);
      if (m == ip - 1) {
        return (rp(p, 2, -1) - rp(p, 2, iJ - 1) * rp(p, 2, ip)).reduce_to(power);
      }
      if (m == ip - 2) {
        ResidueModPk three_halves = rp(p, 3, 3) * rp(p, 3, 2).inverse();
        ResidueModPk pp = rp(p, 3, ip);
        return (-pp - (rp(p, 3, iJ) - three_halves) * pp * pp).reduce_to(power);
      }
      ResidueModPk a = ResidueModPk::from_big(p, 3, glaisher_A(p, ip - m - 1, limits));
      ResidueModPk v = rp(p, 3, m % 2 == 0 ? m : -m) * a;
      return v.reduce_to(power);
    }
    case HarmonicMethod::GlaisherBernoulli: {
      require_index(m >= 1 && m + 3 <= ip, name, "[1, p-3]", m);
      if (m % 2 == 0) {
        ResidueModPk b = bernoulli_mod_p(ip - 1 - m, p);
        return (rp(p, 2, m) * rp(p, 2, m + 1).inverse() * rp(p, 2, ip) *
                rp(p, 2, static_cast<std::int64_t>(b.value())))
            .reduce_to(power);
      }
      ResidueModPk b = bernoulli_mod_p(ip - 2 - m, p);
      ResidueModPk coeff = rational_mod_pk(Rational(-m * (m + 1), 2 * (m + 2)), p, 3);
      return (coeff * rp(p, 3, ip * ip) * rp(p, 3, static_cast<std::int64_t>(b.value()))).reduce_to(power);
    }
    case HarmonicMethod::PowerSums: {
      require_index(m >= 1 && m <= ip - 2, name, "[1, p-2]", m);
      const std::int64_t k = ip - 1 - m;
      ResidueModPk factor = rp(p, 2, 1) + rp(p, 2, k % 2 == 0 ? 1 : -1) * rp(p, 2, k).inverse();
      return (factor * sum_powers_mod(p, 2, k)).reduce_to(power);
    }
    case HarmonicMethod::BernoulliSquare: {
      require_index(m >= 1 && m <= ip - 2, name, "[1, p-2]", m);
      const std::int64_t k = ip - 1 - m;
      ResidueModPk factor = rp(p, 2, 1) + rp(p, 2, k % 2 == 0 ? 1 : -1) * rp(p, 2, k).inverse();
      return (factor * pB_mod(k, p, 2, limits)).reduce_to(power);
    }
    case HarmonicMethod::Sun: {
      require_index(m >= 1 && m <= ip - 2, name, "[1, p-2]", m);
      const std::int64_t k = m + 1;
      ResidueModPk pb = (ip - k == 1) ? rational_mod_pk(Rational(ip) * bernoulli_classical(1), p, 2)
                                      : pB_mod(ip - k, p, 2, limits);
      return (rp(p, 2, k - 1) * rp(p, 2, k).inverse() * pb).reduce_to(power);
    }
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown method");
}

ResidueModPk wolstenholme_binomial(std::uint64_t p) {
  const auto ip = static_cast<std::int64_t>(p);
  return ResidueModPk::from_big(p, 3, binomial(2 * ip - 1, ip - 1));
}

ResidueModPk wolstenholme_quotient(std::uint64_t p) {
  require_prime(p, 5);
  const auto ip = static_cast<std::int64_t>(p);
  BigInt c = binomial(2 * ip - 1, ip - 1) - 1;
  BigInt p3 = BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) * static_cast<unsigned long>(p);
  if (!mpz_divisible_p(c.get_mpz_t(), p3.get_mpz_t())) {
    throw Error(ErrorCode::PreconditionViolated, "p^3 does not divide C(2p-1, p-1) - 1");
  }
  return ResidueModPk::from_big(p, 1, c / p3);
}

bool is_wolstenholme_prime(std::uint64_t p) {
  require_prime(p, 5);
  return harmonic_sum_mod(p, 1, 3).is_zero();
}

}  // namespace congruence
