#include "congruence/faulhaber.hpp"

#include <utility>

#include "congruence/error.hpp"
#include "congruence/modular.hpp"

namespace congruence {

namespace md = modular;

BigInt sum_powers_exact(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1, m >= 0");
  BigInt acc = 0, term;
  for (std::int64_t k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    acc += term;
  }
  return acc;
}

ResidueModPk sum_powers_mod(std::uint64_t p, unsigned k, std::int64_t m) {
  if (k > 4) throw Error(ErrorCode::PrecisionUnsupported, "k <= 4");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  ResidueModPk zero(p, k);
  return ResidueModPk::from_unsigned(p, k, md::power_sum(p - 1, static_cast<std::uint64_t>(m), zero.modulus()));
}

BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> gessel_viennot_matrix(std::int64_t k, std::int64_t m) {
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
  for (std::int64_t i = 1; i <= k; ++i) {
    for (std::int64_t j = 1; j <= k && j <= i + 1; ++j) {
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          generalized_binomial(m - k + i, 2 * (i - j) + 3);
    }
  }
  return a;
}

namespace {

void check_gv_range(std::int64_t k, std::int64_t m) {
  if (k < 0 || k > m - 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "need 0 <= k <= m-1, got k=" + std::to_string(k) + ", m=" + std::to_string(m));
  }
}

}  // namespace

Rational gessel_viennot_A(std::int64_t k, std::int64_t m) {
  check_gv_range(k, m);
  if (k == 0) return 1;
  BigInt den = 1;
  for (std::int64_t t = 1; t <= k; ++t) den *= static_cast<long>(t - m);
  return Rational(integer_determinant(gessel_viennot_matrix(k, m)), den);
}

// For lower Hessenberg H with D_0 = 1:
//   D_i = sum_{j=1}^{i} (-1)^{i-j} h_{ij} (prod_{t=j}^{i-1} h_{t,t+1}) D_{j-1}.
ResidueModPk gessel_viennot_A_mod(std::int64_t k, std::int64_t m, std::uint64_t p, unsigned power) {
  check_gv_range(k, m);
  ResidueModPk one(p, power, 1);
  if (k == 0) return one;
  const std::uint64_t mod = one.modulus();
  // binom[i][b] = C(m-k+i, b) mod p^power, row i built from row i-1 by Pascal.
  const auto width = static_cast<std::size_t>(2 * k + 4);
  std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(k + 1), std::vector<std::uint64_t>(width));
  for (std::size_t b = 0; b < width; ++b) {
    binom[1][b] = big_mod(generalized_binomial(m - k + 1, static_cast<std::int64_t>(b)), mod);
  }
  for (std::size_t i = 2; i <= static_cast<std::size_t>(k); ++i) {
    binom[i][0] = 1;
    for (std::size_t b = 1; b < width; ++b) binom[i][b] = md::add(binom[i - 1][b], binom[i - 1][b - 1], mod);
  }
  auto entry = [&](std::int64_t i, std::int64_t j) -> std::uint64_t {
    if (j > i + 1) return 0;
    return binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * (i - j) + 3)];
  };
  std::vector<std::uint64_t> d(static_cast<std::size_t>(k + 1));
  d[0] = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t chain = 1;  // prod_{t=j}^{i-1} h_{t,t+1}
    for (std::int64_t j = i; j >= 1; --j) {
      if (j < i) chain = md::mul(chain, entry(j, j + 1), mod);
      std::uint64_t term = md::mul(md::mul(entry(i, j), chain, mod), d[static_cast<std::size_t>(j - 1)], mod);
      acc = ((i - j) % 2 == 0) ? md::add(acc, term, mod) : md::sub(acc, term, mod);
    }
    d[static_cast<std::size_t>(i)] = acc;
  }
  ResidueModPk den = one;
  for (std::int64_t t = 1; t <= k; ++t) den *= ResidueModPk(p, power, t - m);
  return ResidueModPk::from_unsigned(p, power, d[static_cast<std::size_t>(k)]) * den.inverse();
}

Rational faulhaber_coeff(std::int64_t i, std::int64_t l) {
  if (i < 1 || i > l) {
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= i <= l, got i=" + std::to_string(i) + ", l=" + std::to_string(l));
  }
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(i + 1));
  return Rational(two_pow) * gessel_viennot_A(l - i, l + 1) / Rational(2 * l + 2);
}

Rational FaulhaberExpansion::evaluate(std::int64_t n) const {
  Rational a(BigInt(static_cast<long>(n)) * static_cast<long>(n + 1) / 2);
  Rational acc;
  Rational power = a;
  for (const auto& c : coefficients) {
    power *= a;
    acc += c * power;
  }
  return acc;
}

FaulhaberExpansion faulhaber_expansion(std::int64_t l) {
  if (l < 1) throw Error(ErrorCode::IndexOutOfRange, "l >= 1");
  FaulhaberExpansion e{2 * l + 1, {}};
  for (std::int64_t i = 1; i <= l; ++i) e.coefficients.push_back(faulhaber_coeff(i, l));
  return e;
}

Rational jacobi_sum(std::int64_t l, std::int64_t n) {
  if (l < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "need l >= 1, n >= 1");
  Rational u(BigInt(static_cast<long>(n)) * static_cast<long>(n + 1));
  Rational acc;
  for (std::int64_t j = 0; j <= l; ++j) {
    acc += gessel_viennot_A(j, l + 1) * u.pow(static_cast<unsigned>(l + 1 - j));
  }
  return acc / Rational(2 * l + 2);
}

// Unknowns d_1..d_{p+1}; column j of the Pascal system reads
//   sum_{i=j+1}^{p+1} d_i C(i, j) = C(p, j),
// solved from j = p down to j = 0.
std::vector<Rational> derby_coefficients(std::uint64_t p, const Limits& limits) {
  if (p < 3 || !md::is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "p >= 3 prime, got " + std::to_string(p));
  }
  if (static_cast<std::int64_t>(p) > limits.derby_cap) {
    throw Error(ErrorCode::CapExceeded, "p=" + std::to_string(p) + " above derby cap " + std::to_string(limits.derby_cap));
  }
  const auto n = static_cast<std::int64_t>(p);
  std::vector<Rational> d(static_cast<std::size_t>(n + 2));
  for (std::int64_t j = n; j >= 0; --j) {
    Rational rhs(binomial(n, j));
    for (std::int64_t i = j + 2; i <= n + 1; ++i) rhs -= d[static_cast<std::size_t>(i)] * Rational(binomial(i, j));
    d[static_cast<std::size_t>(j + 1)] = rhs / Rational(j + 1);
  }
  d.erase(d.begin());
  return d;
}

}  // namespace congruence
