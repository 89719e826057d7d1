#include "pframe/gale.hpp"

#include "pframe/errors.hpp"
#include "pframe/linalg.hpp"

#include <cmath>
#include <string>

namespace pframe {

GaleDual gale_dual_from_kernel(const GramMatrix& a, const Matrix& kernel, double tol) {
  const std::size_t n = a.size();
  const std::size_t codim = kernel.cols();
  if (kernel.rows() != n)
    throw Error(errc::dimension_mismatch, "kernel basis rows must match the Gram size");
  if (codim == 0) throw Error(errc::degenerate, "empty kernel, N == rank");

  // Whiten: with B = K (K^T K)^(-1/2), the rows of B^T form an orthonormal
  // family and Y = B^T / sqrt(N-d) is tight with constant 1/(N-d).
  const Matrix w = kernel.transposed() * kernel;
  const Matrix r = inv_sqrt_psd(w, 1e-12);
  const Matrix b = kernel * r;

  const double inv_sqrt_codim = 1.0 / std::sqrt(static_cast<double>(codim));
  GaleDual g;
  g.frame_constant = 1.0 / static_cast<double>(codim);
  g.y = Matrix(codim, n);
  for (std::size_t k = 0; k < codim; ++k)
    for (std::size_t i = 0; i < n; ++i) g.y(k, i) = b(i, k) * inv_sqrt_codim;
  g.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = 0.0;
    for (std::size_t k = 0; k < codim; ++k) t += g.y(k, i) * g.y(k, i);
    g.weights[i] = t;
  }

  // Columns of Y^T must lie in Ker A.
  const Matrix residual = a.entries * g.y.transposed();
  const double scale = std::max(1.0, a.entries.max_abs());
  if (residual.max_abs() > tol * scale)
    throw Error(errc::numerical_failure,
                "kernel residual " + std::to_string(residual.max_abs()) + " exceeds tolerance");
  return g;
}

GaleDual gale_dual(const GramMatrix& a, std::size_t d, double tol) {
  const std::size_t n = a.size();
  if (n == d) throw Error(errc::degenerate, "N == d leaves an empty dual");
  const std::size_t rank = numerical_rank(a.entries);
  if (rank != d)
    throw Error(errc::rank_mismatch, "numerical rank " + std::to_string(rank) +
                                         " does not match d = " + std::to_string(d));
  return gale_dual_from_kernel(a, kernel_basis(a.entries), tol);
}

GaleReport verify_gale(const GramMatrix& a, const GaleDual& g, double tol) {
  const std::size_t n = a.size();
  GaleReport report;
  if (g.n() != n) throw Error(errc::dimension_mismatch, "dual size does not match Gram size");

  // All three residuals are recomputed from Y itself, so corrupted duals
  // fail regardless of what the weights field claims.
  const Matrix m = g.y.transposed() * g.y;  // <y_i, y_j>
  for (std::size_t i = 0; i < n; ++i) {
    double row = m(i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row += a.entries(i, j) * m(i, j);
    report.kernel_residual = std::max(report.kernel_residual, std::fabs(row));
  }

  const std::size_t codim = g.codim();
  Matrix yyt = g.y * g.y.transposed();
  for (std::size_t k = 0; k < codim; ++k) yyt(k, k) -= g.frame_constant;
  report.tightness_residual = yyt.frobenius_norm();

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += m(i, i);
  report.weight_sum_residual = std::fabs(sum - 1.0);

  report.pass = report.kernel_residual <= tol && report.tightness_residual <= tol &&
                report.weight_sum_residual <= tol;
  return report;
}

}  // namespace pframe
