#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congruence/polynomial.hpp"
#include "congruence/rational.hpp"

namespace congruence {

/// [k]_q = 1 + q + ... + q^{k-1}.
RationalPolynomial q_integer(std::int64_t k);

/// Gaussian binomial by the q-Pascal rule C(n,m) = C(n-1,m-1) + q^m C(n-1,m).
RationalPolynomial q_binomial(std::int64_t n, std::int64_t m);

/// A polynomial reduced modulo [p]_q^power.
struct QCongruenceSide {
  RationalPolynomial value;
  std::uint64_t prime;
  unsigned power;

  /// "[p]_q^power"
  std::string modulus_string() const;
  friend bool operator==(const QCongruenceSide&, const QCongruenceSide&) = default;
};

/// f mod [p]_q^power.
QCongruenceSide q_reduce(const RationalPolynomial& f, std::uint64_t p, unsigned power);

/// sum_{j=1}^{p-1} 1/[j]_q^order (times q^j when twisted) mod [p]_q^power.
/// power <= 2 for order 1, power 1 otherwise.
QCongruenceSide q_harmonic_mod(std::uint64_t p, unsigned order, bool twisted, unsigned power);

/// Determinant of the k x k banded matrix with C(x+1, i-j+2) on and below the
/// diagonal (C(x, i-j+2) when twisted) and x on the superdiagonal.
Rational dilcher_D(std::int64_t k, std::int64_t x, bool twisted);

/// prod C(n_i, m_i) over base-p digits, mod p.
std::uint64_t lucas_product(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// Carries when adding m and n-m in base p.
unsigned kummer_carries(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// v_p(p^3 m (n-m) C(n,m)); -1 when the product is zero (infinite exponent).
std::int64_t helou_terjanian_exponent(std::int64_t n, std::int64_t m, std::uint64_t p);

}  // namespace congruence
