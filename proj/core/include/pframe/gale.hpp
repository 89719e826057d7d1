#pragma once

#include "pframe/configs.hpp"
#include "pframe/matrix.hpp"

#include <cstddef>
#include <vector>

namespace pframe {

/// Tight frame in R^(N-d) built from the kernel of a rank-d unit-diagonal
/// Gram matrix. Columns y_i of Y satisfy Y Y^T = I/(N-d) and the weights
/// t_i = <y_i, y_i> sum to 1 with 0 <= t_i < 1/(N-d).
struct GaleDual {
  Matrix y;                     // (N-d) x N
  std::vector<double> weights;  // t_i
  double frame_constant = 0.0;  // 1/(N-d)

  std::size_t n() const { return y.cols(); }
  std::size_t codim() const { return y.rows(); }
};

/// Build the dual from A. Throws degenerate when N == d, rank_mismatch
/// when the numerical rank of A differs from d, numerical_failure if the
/// kernel identity of the construction misses tol.
GaleDual gale_dual(const GramMatrix& a, std::size_t d, double tol = 1e-8);

/// Same construction from a caller-supplied kernel basis (columns need
/// not be orthonormal; they are whitened). The weights are invariant
/// under any change of kernel basis.
GaleDual gale_dual_from_kernel(const GramMatrix& a, const Matrix& kernel, double tol = 1e-8);

struct GaleReport {
  double kernel_residual = 0.0;     // max_i |t_i + sum_{j!=i} A_ij <y_i,y_j>|
  double tightness_residual = 0.0;  // ||Y Y^T - I/(N-d)||_F
  double weight_sum_residual = 0.0; // |sum t_i - 1|
  bool pass = false;
};

GaleReport verify_gale(const GramMatrix& a, const GaleDual& g, double tol);

}  // namespace pframe
