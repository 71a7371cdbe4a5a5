#include "congruence/qanalog.hpp"


#include "congruence/error.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/modular.hpp"

namespace congruence {

RationalPolynomial q_integer(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "[k]_q needs k >= 1");
  return RationalPolynomial(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
}

RationalPolynomial q_binomial(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) {
    throw Error(ErrorCode::InvalidArgument, "need 0 <= m <= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  // row[j] = C(i, j)_q, updated in place from right to left.
  std::vector<RationalPolynomial> row(static_cast<std::size_t>(m + 1));
  row[0] = RationalPolynomial::constant(1);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, m); j >= 1; --j) {
      auto ju = static_cast<std::size_t>(j);
      row[ju] = row[ju - 1] + row[ju] * RationalPolynomial::monomial(1, ju);
    }
  }
  return row[static_cast<std::size_t>(m)];
}

std::string QCongruenceSide::modulus_string() const {
  return "[" + std::to_string(prime) + "]_q^" + std::to_string(power);
}

QCongruenceSide q_reduce(const RationalPolynomial& f, std::uint64_t p, unsigned power) {
  if (power == 0) throw Error(ErrorCode::InvalidArgument, "power >= 1");
  return {f % q_integer(static_cast<std::int64_t>(p)).pow(power), p, power};
}

QCongruenceSide q_harmonic_mod(std::uint64_t p, unsigned order, bool twisted, unsigned power) {
  if (p < 3 || !modular::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p >= 3 prime, got " + std::to_string(p));
  }
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "order >= 1");
  if (power == 0 || power > (order == 1 ? 2U : 1U)) {
    throw Error(ErrorCode::PrecisionUnsupported,
                "order " + std::to_string(order) + " supports power <= " + (order == 1 ? "2" : "1"));
  }
  const RationalPolynomial mod = q_integer(static_cast<std::int64_t>(p)).pow(power);
  RationalPolynomial sum;
  for (std::uint64_t j = 1; j < p; ++j) {
    RationalPolynomial denom = q_integer(static_cast<std::int64_t>(j)).pow(order) % mod;
    RationalPolynomial term = poly_inverse_mod(denom, mod);
    if (twisted) term = (term * RationalPolynomial::monomial(1, j)) % mod;
    sum += term;
  }
  return {sum % mod, p, power};
}

Rational dilcher_D(std::int64_t k, std::int64_t x, bool twisted) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k >= 1");
  const std::int64_t top = twisted ? x : x + 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = 0; j < k; ++j) {
      auto& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (j <= i) cell = generalized_binomial(top, i - j + 2);
      else if (j == i + 1) cell = static_cast<long>(x);
    }
  }
  return Rational(integer_determinant(std::move(a)));
}

std::uint64_t lucas_product(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (n > 0 || m > 0) {
    const auto ni = static_cast<std::int64_t>(n % p), mi = static_cast<std::int64_t>(m % p);
    acc = modular::mul(acc, big_mod(binomial(ni, mi), p), p);
    n /= p;
    m /= p;
  }
  return acc;
}

unsigned kummer_carries(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (m > n) throw Error(ErrorCode::InvalidArgument, "m <= n");
  std::uint64_t a = m, b = n - m, carry = 0;
  unsigned count = 0;
  while (a > 0 || b > 0 || carry > 0) {
    std::uint64_t s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    count += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return count;
}

std::int64_t helou_terjanian_exponent(std::int64_t n, std::int64_t m, std::uint64_t p) {
  BigInt prod = binomial(n, m) * static_cast<long>(m) * static_cast<long>(n - m);
  if (prod == 0) return -1;
  return 3 + static_cast<std::int64_t>(valuation(prod, p));
}

}  // namespace congruence
