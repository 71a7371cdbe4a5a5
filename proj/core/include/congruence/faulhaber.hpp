#pragma once

#include <cstdint>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// sum_{k=1}^{n} k^m.
BigInt sum_powers_exact(std::int64_t n, std::int64_t m);

/// sum_{j=1}^{p-1} j^m mod p^k, for k <= 4.
ResidueModPk sum_powers_mod(std::uint64_t p, unsigned k, std::int64_t m);

/// Determinant of a square integer matrix (fraction-free elimination).
BigInt integer_determinant(std::vector<std::vector<BigInt>> matrix);

/// The k x k Gessel-Viennot matrix for A_k^{(m)}: entry (i, j), 1-indexed, is
/// C(m-k+i, 2(i-j)+3) for j <= i+1 and 0 above the superdiagonal.
std::vector<std::vector<BigInt>> gessel_viennot_matrix(std::int64_t k, std::int64_t m);

/// A_k^{(m)} = det / prod_{t=1}^{k} (t - m); A_0^{(m)} = 1. Needs 0 <= k <= m-1.
Rational gessel_viennot_A(std::int64_t k, std::int64_t m);

/// A_k^{(m)} mod p^power. The matrix is lower Hessenberg, so the determinant
/// is taken mod p^power without division. Throws NonUnit when some t - m is
/// divisible by p.
ResidueModPk gessel_viennot_A_mod(std::int64_t k, std::int64_t m, std::uint64_t p, unsigned power);

/// c_i(l) = 2^{i+1} A_{l-i}^{(l+1)} / (2l+2), for 1 <= i <= l.
Rational faulhaber_coeff(std::int64_t i, std::int64_t l);

/// sum_{k=1}^{n} k^{2l+1} = sum_i c_i(l) a^{i+1} with a = n(n+1)/2.
struct FaulhaberExpansion {
  std::int64_t odd_power;
  /// coefficients[i-1] = c_i(l).
  std::vector<Rational> coefficients;

  Rational evaluate(std::int64_t n) const;
};

FaulhaberExpansion faulhaber_expansion(std::int64_t l);

/// (1/(2l+2)) sum_{j=0}^{l} A_j^{(l+1)} u^{l+1-j} at u = n(n+1).
Rational jacobi_sum(std::int64_t l, std::int64_t n);

/// d_1..d_{p+1} with sum_{k=1}^{n} k^p = sum_i d_i n^i, from the Pascal-matrix
/// system. Throws CapExceeded above limits.derby_cap.
std::vector<Rational> derby_coefficients(std::uint64_t p, const Limits& limits = kDefaultLimits);

}  // namespace congruence
