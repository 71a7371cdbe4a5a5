#include "congruence/wilson.hpp"

#include <array>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/modular.hpp"

namespace congruence {

namespace md = modular;

namespace {

void require_prime(std::uint64_t p, std::uint64_t min = 3) {
  if (p < min || !md::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated,
                "p >= " + std::to_string(min) + " prime, got " + std::to_string(p));
  }
}

void require_base(std::uint64_t k, std::uint64_t p) {
  if (k < 1 || k >= p) {
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= k <= p-1, got k=" + std::to_string(k));
  }
}

ResidueModPk rp(std::uint64_t p, unsigned k, std::int64_t v) { return ResidueModPk(p, k, v); }

}  // namespace

std::uint64_t delta0(std::uint64_t k, std::uint64_t p) {
  require_prime(p, 2);
  require_base(k, p);
  const std::uint64_t m = md::prime_power(p, 2);
  return (md::pow(k, p - 1, m) / p) % p;
}

std::uint64_t delta1(std::uint64_t k, std::uint64_t p) {
  require_prime(p, 2);
  require_base(k, p);
  const std::uint64_t m = md::prime_power(p, 3);
  return md::pow(k, p - 1, m) / (p * p);
}

ResidueModPk RootLift::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * prime + digits[i];
  return ResidueModPk::from_unsigned(prime, precision(), v);
}

RootLift hensel_root(std::int64_t k, std::uint64_t p, unsigned precision) {
  require_prime(p, 2);
  if (precision == 0 || precision > 4) {
    throw Error(ErrorCode::PrecisionUnsupported, "precision must be in [1, 4]");
  }
  if (md::reduce(k, p) == 0) throw Error(ErrorCode::NonUnit, std::to_string(k) + " = 0 mod " + std::to_string(p));
  const std::uint64_t mod = md::prime_power(p, precision);
  const std::uint64_t fact = factorial_mod_pk(p, precision).value();
  std::uint64_t x = md::reduce(k, p);
  for (unsigned step = 1; step < precision; step *= 2) {
    std::uint64_t g = md::add(md::pow(x, p - 1, mod), fact, mod);
    std::uint64_t dg = md::mul((p - 1) % mod, md::pow(x, p - 2, mod), mod);
    x = md::sub(x, md::mul(g, md::inverse(dg, mod), mod), mod);
  }
  RootLift lift{p, md::reduce(k, p), {}};
  for (unsigned i = 0; i < precision; ++i) {
    lift.digits.push_back(x % p);
    x /= p;
  }
  return lift;
}

std::vector<RootLift> all_root_lifts(std::uint64_t p, unsigned precision) {
  std::vector<RootLift> out;
  for (std::uint64_t k = 1; k < p; ++k) out.push_back(hensel_root(static_cast<std::int64_t>(k), p, precision));
  return out;
}

std::uint64_t first_digit_closed_form(std::uint64_t k, std::uint64_t p) {
  require_base(k, p);
  const std::uint64_t m = md::prime_power(p, 2);
  std::uint64_t w = factorial_mod_pk(p, 2).value();
  std::uint64_t inner = md::add(md::add(1, w, m), md::mul(p, delta0(k, p), m), m);
  return md::mul(k, inner, m) / p;
}

std::uint64_t second_digit_closed_form(std::uint64_t k, std::uint64_t p) {
  require_base(k, p);
  std::uint64_t s = 0;
  for (std::uint64_t j = 1; j < p; ++j) s = (s + delta0(j, p)) % p;
  const std::uint64_t d0 = delta0(k, p), d1 = delta1(k, p);
  std::uint64_t inner = (d0 + d1 + md::mul(s, s, p) + md::mul((1 + d0) % p, s, p)) % p;
  return md::mul(k, inner, p);
}

std::uint64_t lift_second_offset(const RootLift& lift) {
  if (lift.precision() < 3) throw Error(ErrorCode::PrecisionUnsupported, "need precision >= 3");
  const std::uint64_t p = lift.prime, k = lift.base;
  const std::uint64_t m = md::prime_power(p, 3);
  std::uint64_t x = lift.value().value() % m;
  std::uint64_t w = factorial_mod_pk(p, 3).value();
  std::uint64_t offset = md::mul(k, md::add(md::add(1, w, m), md::mul(p, delta0(k, p), m), m), m);
  std::uint64_t rest = md::sub(md::sub(x, k, m), offset, m);
  return rest / (p * p);
}

ResidueModPk factorial_mod_pk(std::uint64_t p, unsigned k) {
  ResidueModPk acc(p, k, 1);
  const std::uint64_t m = acc.modulus();
  std::uint64_t v = 1 % m;
  for (std::uint64_t j = 2; j < p; ++j) v = md::mul(v, j, m);
  return ResidueModPk::from_unsigned(p, k, v);
}

WilsonDigits wilson_digits(std::uint64_t p) {
  ResidueModPk f = factorial_mod_pk(p, 3) + rp(p, 3, 1);
  return {p, f.digit(1), f.digit(2)};
}

namespace {

constexpr std::array<std::pair<WilsonMethod, std::string_view>, 8> kWilsonNames{{
    {WilsonMethod::FermatQuotient, "fermat_quotient"},
    {WilsonMethod::FaulhaberTrailing, "faulhaber_trailing"},
    {WilsonMethod::Glaisher, "glaisher"},
    {WilsonMethod::PowerSums, "power_sums"},
    {WilsonMethod::FermatDigits, "fermat_digits"},
    {WilsonMethod::BernoulliCubic, "bernoulli_cubic"},
    {WilsonMethod::Sun, "sun"},
    {WilsonMethod::SunExpanded, "sun_expanded"},
}};

// -1 + p sum delta0 mod p^2
ResidueModPk predict_fermat_quotient(std::uint64_t p) {
  std::int64_t s = 0;
  for (std::uint64_t k = 1; k < p; ++k) s += static_cast<std::int64_t>(delta0(k, p));
  return rp(p, 2, -1) + rp(p, 2, static_cast<std::int64_t>(p)) * rp(p, 2, s);
}

// (1/2) c_1(l) - p with c_1(l) = 4 A_{l-1}^{(l+1)} / (2l+2), p = 2l+1
ResidueModPk predict_faulhaber_trailing(std::uint64_t p) {
  const auto l = static_cast<std::int64_t>((p - 1) / 2);
  ResidueModPk a = gessel_viennot_A_mod(l - 1, l + 1, p, 2);
  ResidueModPk c1 = rp(p, 2, 4) * a * rp(p, 2, 2 * l + 2).inverse();
  return c1 * rp(p, 2, 2).inverse() - rp(p, 2, static_cast<std::int64_t>(p));
}

ResidueModPk predict_glaisher(std::uint64_t p, const Limits& limits) {
  return pB_mod(static_cast<std::int64_t>(p - 1), p, 2, limits) - rp(p, 2, static_cast<std::int64_t>(p));
}

// -1 - (S_{p-1}^2 + S_{2p-2})/2 + (2p+1) S_{p-1} - (p-1)(3p/2 + 1)
ResidueModPk predict_power_sums(std::uint64_t p) {
  const auto ip = static_cast<std::int64_t>(p);
  ResidueModPk s1 = sum_powers_mod(p, 3, ip - 1);
  ResidueModPk s2 = sum_powers_mod(p, 3, 2 * ip - 2);
  ResidueModPk half = rp(p, 3, 2).inverse();
  return rp(p, 3, -1) - half * (s1 * s1 + s2) + rp(p, 3, 2 * ip + 1) * s1 -
         rp(p, 3, ip - 1) * (rp(p, 3, 3 * ip) * half + rp(p, 3, 1));
}

// -1 + p s0 + p^2 sum (d0 + d1) - (p^2/2)(s0^2 + sum d0^2)
ResidueModPk predict_fermat_digits(std::uint64_t p) {
  const auto ip = static_cast<std::int64_t>(p);
  ResidueModPk s0 = rp(p, 3, 0), s01 = rp(p, 3, 0), sq = rp(p, 3, 0);
  for (std::uint64_t k = 1; k < p; ++k) {
    ResidueModPk d0 = rp(p, 3, static_cast<std::int64_t>(delta0(k, p)));
    ResidueModPk d1 = rp(p, 3, static_cast<std::int64_t>(delta1(k, p)));
    s0 += d0;
    s01 += d0 + d1;
    sq += d0 * d0;
  }
  ResidueModPk pp = rp(p, 3, ip);
  ResidueModPk p2 = pp * pp;
  return rp(p, 3, -1) + pp * s0 + p2 * s01 - p2 * rp(p, 3, 2).inverse() * (s0 * s0 + sq);
}

struct BernoulliPair {
  ResidueModPk b1;  // p B_{p-1}
  ResidueModPk b2;  // p B_{2p-2}
};

BernoulliPair bernoulli_pair(std::uint64_t p, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  return {pB_mod(ip - 1, p, 3, limits), pB_mod(2 * ip - 2, p, 3, limits)};
}

// p/2 - (3/2) p^2 + (2p+1) pB_{p-1} - pB_{2p-2}/2 - (pB_{p-1})^2/2
ResidueModPk predict_bernoulli_cubic(std::uint64_t p, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  auto [b1, b2] = bernoulli_pair(p, limits);
  ResidueModPk half = rp(p, 3, 2).inverse();
  ResidueModPk pp = rp(p, 3, ip);
  return pp * half - rp(p, 3, 3) * half * pp * pp + rp(p, 3, 2 * ip + 1) * b1 - half * b2 - half * b1 * b1;
}

// -pB_{p-1}/(p-1) + pB_{2p-2}/(2(p-1)) - (pB_{p-1}/(p-1))^2 / 2
ResidueModPk predict_sun(std::uint64_t p, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  auto [b1, b2] = bernoulli_pair(p, limits);
  ResidueModPk inv = rp(p, 3, ip - 1).inverse();
  ResidueModPk half = rp(p, 3, 2).inverse();
  ResidueModPk x = b1 * inv;
  return -x + b2 * half * inv - half * x * x;
}

// -2p^2 - ((p+1)/2) pB_{2p-2} + (p+1) pB_{p-1} - ((2p+1)/2) (pB_{p-1})^2
ResidueModPk predict_sun_expanded(std::uint64_t p, const Limits& limits) {
  const auto ip = static_cast<std::int64_t>(p);
  auto [b1, b2] = bernoulli_pair(p, limits);
  ResidueModPk half = rp(p, 3, 2).inverse();
  return rp(p, 3, -2 * ip * ip) - rp(p, 3, ip + 1) * half * b2 + rp(p, 3, ip + 1) * b1 -
         rp(p, 3, 2 * ip + 1) * half * b1 * b1;
}

}  // namespace

std::string_view to_string(WilsonMethod m) {
  for (const auto& [method, name] : kWilsonNames) {
    if (method == m) return name;
  }
  return "unknown";
}

WilsonMethod parse_wilson_method(std::string_view name) {
  for (const auto& [method, n] : kWilsonNames) {
    if (n == name) return method;
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown Wilson method '" + std::string(name) + "'");
}

unsigned wilson_method_power(WilsonMethod m) {
  switch (m) {
    case WilsonMethod::FermatQuotient:
    case WilsonMethod::FaulhaberTrailing:
    case WilsonMethod::Glaisher:
      return 2;
    default:
      return 3;
  }
}

ResidueModPk wilson_predict(std::uint64_t p, WilsonMethod method, const Limits& limits) {
  if (!md::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (p < 5) {
    throw Error(ErrorCode::MethodUnsupported,
                std::string(to_string(method)) + " needs p >= 5, got " + std::to_string(p));
  }
  switch (method) {
    case WilsonMethod::FermatQuotient: return predict_fermat_quotient(p);
    case WilsonMethod::FaulhaberTrailing: return predict_faulhaber_trailing(p);
    case WilsonMethod::Glaisher: return predict_glaisher(p, limits);
    case WilsonMethod::PowerSums: return predict_power_sums(p);
    case WilsonMethod::FermatDigits: return predict_fermat_digits(p);
    case WilsonMethod::BernoulliCubic: return predict_bernoulli_cubic(p, limits);
    case WilsonMethod::Sun: return predict_sun(p, limits);
    case WilsonMethod::SunExpanded: return predict_sun_expanded(p, limits);
  }
  throw Error(ErrorCode::MethodUnsupported, "unknown method");
}

std::vector<std::uint64_t> wilson_primes(std::uint64_t max) {
  std::vector<std::uint64_t> out;
  for (auto p : md::primes_in_range(2, max)) {
    if (factorial_mod_pk(p, 2).value() == p * p - 1) out.push_back(p);
  }
  return out;
}

}  // namespace congruence
