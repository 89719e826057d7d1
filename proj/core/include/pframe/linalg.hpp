#pragma once

#include "pframe/matrix.hpp"

#include <cstddef>
#include <vector>

namespace pframe {

/// Eigendecomposition of a symmetric matrix. Eigenvalues sorted in
/// descending order; eigenvectors are the matching columns, orthonormal,
/// each with its first entry of largest magnitude made nonnegative.
struct EigenResult {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

inline constexpr double kDefaultRankTol = 1e-8;

/// Cyclic Jacobi eigendecomposition, iteration budget 100 sweeps.
/// Throws not_symmetric if the asymmetry of S exceeds tol (relative to
/// max(1, |S|_max)), no_convergence if the budget is exhausted.
EigenResult sym_eigen(const Matrix& s, double tol = 1e-10);

/// Number of eigenvalues with |lambda| > rank_tol * |lambda|_max.
std::size_t numerical_rank(const Matrix& a, double rank_tol = kDefaultRankTol);

/// Orthonormal basis of the numerical kernel of a symmetric matrix,
/// returned as an N x (N - rank) matrix of columns. Throws empty_kernel
/// when A has full numerical rank.
Matrix kernel_basis(const Matrix& a, double rank_tol = kDefaultRankTol);

/// Symmetric inverse square root of a positive-definite matrix:
/// R * S * R = I. Throws not_positive_definite if an eigenvalue <= tol.
Matrix inv_sqrt_psd(const Matrix& s, double tol = 1e-12);

}  // namespace pframe
