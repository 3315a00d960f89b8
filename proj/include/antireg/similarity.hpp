#pragma once

#include <cstddef>

#include "antireg/int_matrix.hpp"
#include "antireg/permutation.hpp"

// The exact similarity chain
//
//   A(G_n) ~ M_n,    M_n^{-1} ~ Y_n = D M_n^{-1} D ~ X_n = P^T Y_n P = (-1)^{n+1} T_n
//
// where M_n is the 0/1 Hankel matrix with ones on and below the anti-diagonal
// and T_n is tridiagonal with unit off-diagonals and a single 1 in the
// bottom-right corner. Every step is integer arithmetic.

namespace antireg {

/// M_n(i,j) = 1 iff i + j >= n + 1 (1-based).
IntMatrix hankel_m(std::size_t n);

/// Permutation Q with Q^T A(G_n) Q = M_n, built by replaying the induction
/// G_{n+1} = H_n + dominating vertex, H_n = G_{n-1} + isolated vertex:
/// the Hankel vertex order for G_{n+1} is [v_n] ++ order(G_{n-1}) ++ [v_{n+1}].
/// The identity is checked exactly before returning.
Permutation similarity_to_hankel(std::size_t n);

/// Entry +1 where i + j = n + 1, -1 where i + j = n (1-based), else 0.
IntMatrix m_inverse(std::size_t n);

/// diag(1, -1, 1, ..., (-1)^{n+1}).
IntMatrix sign_diag(std::size_t n);

/// D M_n^{-1} D by exact multiplication. Equals (-1)^{n+1} times the 0/1 anti-band
/// with ones at i + j in {n, n+1}.
IntMatrix y_matrix(std::size_t n);

/// even n: sigma(k) = 2k (k <= n/2), sigma(n/2 + j) = n - (2j - 1);
/// odd n:  sigma(k) = 2k (k <= (n-1)/2), sigma((n+1)/2) = n, then n-2, n-4, ..., 1.
Permutation permutation_sigma(std::size_t n);

/// Tridiagonal, zero diagonal except T(n,n) = 1, ones on both off-diagonals.
IntMatrix corner_tridiagonal(std::size_t n);

/// P^T Y_n P with P from permutation_sigma(n); throws InvariantViolation unless the
/// result equals (-1)^{n+1} T_n.
IntMatrix x_matrix(std::size_t n);

}  // namespace antireg
