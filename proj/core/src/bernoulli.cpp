#include "congruence/bernoulli.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"

namespace congruence {

namespace fs = std::filesystem;

namespace {

// Denominator of B_n for even n >= 2: product of primes q with (q-1) | n.
BigInt staudt_denominator(std::int64_t n) {
  BigInt d = 1;
  for (std::int64_t q = 2; q <= n + 1; ++q) {
    if (n % (q - 1) == 0 && modular::is_prime(static_cast<std::uint64_t>(q))) d *= static_cast<long>(q);
  }
  return d;
}

}  // namespace

BernoulliTable::BernoulliTable(fs::path cache) { attach_cache(std::move(cache)); }

BernoulliTable& BernoulliTable::shared() {
  static BernoulliTable* table = [] {
    auto* t = new BernoulliTable();
    if (const char* env = std::getenv("CONGRUENCE_CACHE"); env != nullptr && *env != '\0') {
      t->attach_cache(env);
    }
    return t;
  }();
  return *table;
}

Rational BernoulliTable::get(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Bernoulli index");
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<std::int64_t>(values_.size())) return values_[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(mutex_);
  if (n >= static_cast<std::int64_t>(values_.size())) {
    extend_locked(n);
    if (cache_) persist_locked();
  }
  return values_[static_cast<std::size_t>(n)];
}

// sum_{j=0}^{n} C(n+1, j) B_j = n + 1
void BernoulliTable::extend_locked(std::int64_t n) {
  values_.reserve(static_cast<std::size_t>(n + 1));
  while (static_cast<std::int64_t>(values_.size()) <= n) {
    const auto m = static_cast<std::int64_t>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      continue;
    }
    if (m == 1) {
      values_.emplace_back(1, 2);
      continue;
    }
    if (m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    mpq_class acc = static_cast<long>(m + 1);
    BigInt c = 1;  // C(m+1, j)
    for (std::int64_t j = 0; j < m; ++j) {
      if (j == 1 || j % 2 == 0) acc -= mpq_class(c) * values_[static_cast<std::size_t>(j)].raw();
      c = c * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
    }
    acc /= static_cast<long>(m + 1);
    values_.push_back(Rational::from_raw(std::move(acc)));
  }
}

void BernoulliTable::attach_cache(fs::path path) {
  std::unique_lock lock(mutex_);
  if (fs::exists(path)) load_locked(path);
  cache_ = std::move(path);
}

std::optional<fs::path> BernoulliTable::cache_path() const {
  std::shared_lock lock(mutex_);
  return cache_;
}

std::int64_t BernoulliTable::size() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(values_.size());
}

void BernoulliTable::persist() const {
  std::shared_lock lock(mutex_);
  persist_locked();
}

void BernoulliTable::persist_locked() const {
  if (!cache_) return;
  fs::path tmp = *cache_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::CacheFormat, "cannot write " + tmp.string());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out << i << ' ' << values_[i].numerator().get_str() << '/' << values_[i].denominator().get_str() << '\n';
    }
    if (!out) throw Error(ErrorCode::CacheFormat, "short write to " + tmp.string());
  }
  fs::rename(tmp, *cache_);
}

void BernoulliTable::load_locked(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::CacheFormat, "cannot read " + path.string());
  std::vector<Rational> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::int64_t index = -1;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra) || value.find('/') == std::string::npos) {
      throw Error(ErrorCode::CacheFormat, path.string() + ": bad line '" + line + "'");
    }
    if (index != static_cast<std::int64_t>(loaded.size())) {
      throw Error(ErrorCode::CacheFormat, path.string() + ": expected index " + std::to_string(loaded.size()) +
                                              ", found " + std::to_string(index));
    }
    Rational b = Rational::parse(value);
    bool ok = true;
    if (index == 0) ok = b == Rational(1);
    else if (index == 1) ok = b == Rational(1, 2);
    else if (index % 2 == 1) ok = b.is_zero();
    else ok = b.denominator() == staudt_denominator(index);
    if (!ok) throw Error(ErrorCode::CacheFormat, path.string() + ": implausible B_" + std::to_string(index));
    loaded.push_back(std::move(b));
  }
  if (loaded.size() > values_.size()) values_ = std::move(loaded);
}

Rational bernoulli_exact(std::int64_t n) { return BernoulliTable::shared().get(n); }

Rational bernoulli_classical(std::int64_t n) {
  if (n == 1) return Rational(-1, 2);
  return bernoulli_exact(n);
}

ResidueModPk bernoulli_mod_p(std::int64_t m, std::uint64_t p) {
  if (m < 2 || m % 2 != 0 || static_cast<std::uint64_t>(m) + 3 > p) {
    throw Error(ErrorCode::IndexOutOfRange,
                "need even 2 <= m <= p-3, got m=" + std::to_string(m) + ", p=" + std::to_string(p));
  }
  ResidueModPk check(p, 2);
  std::uint64_t s = modular::power_sum(p - 1, static_cast<std::uint64_t>(m), check.modulus());
  return ResidueModPk::from_unsigned(p, 1, s / p);
}

ResidueModPk pB_mod(std::int64_t m, std::uint64_t p, unsigned power, const Limits& limits) {
  if (power == 0 || power > 3) {
    throw Error(ErrorCode::PrecisionUnsupported, "pB mod p^" + std::to_string(power));
  }
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative Bernoulli index");
  if (m <= limits.bernoulli_exact_cap || m < 4) {
    return rational_mod_pk(Rational(static_cast<std::int64_t>(p)) * bernoulli_exact(m), p, power);
  }
  if (m % 2 == 1) return ResidueModPk(p, power, 0);
  if (p < 5) {
    throw Error(ErrorCode::RangeExceeded,
                "B_" + std::to_string(m) + " is past the exact cap and p < 5 has no modular route");
  }
  // p B_m = S_m - (m(m-1)/6) p^2 (p B_{m-2}) mod p^3, with p B_{m-2} mod p
  // fixed by von Staudt-Clausen.
  ResidueModPk zero(p, 3);
  const std::uint64_t mod = zero.modulus();
  std::uint64_t s = modular::power_sum(p - 1, static_cast<std::uint64_t>(m), mod);
  ResidueModPk value = ResidueModPk::from_unsigned(p, 3, s);
  if ((m - 2) % static_cast<std::int64_t>(p - 1) == 0) {
    ResidueModPk coeff = rational_mod_pk(Rational(m * (m - 1), 6), p, 3);
    value += coeff * ResidueModPk::from_unsigned(p, 3, p * p);
  }
  return value.reduce_to(power);
}

PadicValue padic_pB(std::int64_t k, std::uint64_t p, unsigned precision, const Limits& limits) {
  if (precision == 0 || precision > 3) {
    throw Error(ErrorCode::PrecisionUnsupported, "precision " + std::to_string(precision) + " > 3");
  }
  if (p < 5 || !modular::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p >= 5 prime, got " + std::to_string(p));
  }
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative k");
  if (k == 0) return PadicValue(1, ResidueModPk(p, precision, 1));
  return PadicValue(0, pB_mod(k * static_cast<std::int64_t>(p - 1), p, precision, limits));
}

std::vector<IrregularPair> irregular_pairs(std::uint64_t p) {
  if (p < 5 || !modular::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p >= 5 prime, got " + std::to_string(p));
  }
  std::vector<IrregularPair> out;
  for (std::int64_t m = 2; static_cast<std::uint64_t>(m) + 3 <= p; m += 2) {
    if (bernoulli_mod_p(m, p).is_zero()) out.push_back({p, m});
  }
  return out;
}

bool miki_identity_check(std::int64_t n) {
  if (n <= 2) throw Error(ErrorCode::PreconditionViolated, "n > 2, got " + std::to_string(n));
  if (n % 2 == 1) return true;
  auto divided = [](std::int64_t i) { return bernoulli_exact(i) / Rational(i); };
  Rational lhs, rhs;
  for (std::int64_t i = 2; i <= n - 2; ++i) {
    Rational term = divided(i) * divided(n - i);
    lhs += term;
    rhs += Rational(binomial(n, i)) * term;
  }
  Rational harmonic;
  for (std::int64_t j = 1; j <= n; ++j) harmonic += Rational(1, j);
  rhs += Rational(2) * harmonic * divided(n);
  return lhs == rhs;
}

bool adams_check(std::int64_t n, std::uint64_t p, unsigned l) {
  if (p <= 3 || !modular::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p > 3 prime, got " + std::to_string(p));
  }
  if (n <= 0 || n % 2 != 0 || n > 400) {
    throw Error(ErrorCode::PreconditionViolated, "n even in [2, 400], got " + std::to_string(n));
  }
  if (n % static_cast<std::int64_t>(p - 1) == 0) {
    throw Error(ErrorCode::PreconditionViolated, "p-1 divides n");
  }
  if (modular::valuation(static_cast<std::uint64_t>(n), p) < l) {
    throw Error(ErrorCode::PreconditionViolated, "p^l does not divide n");
  }
  BigInt num = bernoulli_exact(n).numerator();
  return valuation(num, p) >= l;
}

std::vector<ThangaduraiFinding> thangadurai_scan(std::int64_t max_n, std::uint64_t max_p) {
  std::vector<ThangaduraiFinding> out;
  auto primes = modular::primes_in_range(5, max_p);
  for (std::int64_t n = 2; n <= max_n; n += 2) {
    for (auto p : primes) {
      if (n % static_cast<std::int64_t>(p) != 0 || n % static_cast<std::int64_t>(p - 1) == 0) continue;
      unsigned l = modular::valuation(static_cast<std::uint64_t>(n), p);
      unsigned beta = valuation(bernoulli_exact(n).numerator(), p);
      if (beta > l + 1) out.push_back({n, p, l, beta});
    }
  }
  return out;
}

bool von_staudt_clausen_holds(std::int64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::PreconditionViolated, "n even >= 2, got " + std::to_string(n));
  }
  Rational sum = bernoulli_exact(n);
  for (std::int64_t q = 2; q <= n + 1; ++q) {
    if (n % (q - 1) == 0 && modular::is_prime(static_cast<std::uint64_t>(q))) sum += Rational(1, q);
  }
  return sum.is_integer();
}

}  // namespace congruence
