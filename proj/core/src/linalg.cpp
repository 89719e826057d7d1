#include "pframe/linalg.hpp"

#include "pframe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pframe {

namespace {

double off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

void fix_sign(Matrix& vecs, std::size_t col) {
  const std::size_t n = vecs.rows();
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::fabs(vecs(i, col));
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (vecs(arg, col) < 0.0)
    for (std::size_t i = 0; i < n; ++i) vecs(i, col) = -vecs(i, col);
}

}  // namespace

EigenResult sym_eigen(const Matrix& s, double tol) {
  const std::size_t n = s.rows();
  if (s.cols() != n) throw Error(errc::not_symmetric, "matrix is not square");
  if (!s.all_finite()) throw Error(errc::invariant_violation, "matrix has non-finite entries");

  const double scale = std::max(1.0, s.max_abs());
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::fabs(s(i, j) - s(j, i)));
  if (asym > tol * scale)
    throw Error(errc::not_symmetric, "asymmetry " + std::to_string(asym) + " exceeds tolerance");

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  Matrix v = Matrix::identity(n);

  const double stop = 1e-15 * std::max(a.frobenius_norm(), 1e-300);
  const int max_sweeps = 100;
  bool converged = off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const double tau = sn / (1.0 + c);

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - sn * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + sn * (arp - tau * arq);
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - sn * (vrq + tau * vrp);
          v(r, q) = vrq + sn * (vrp - tau * vrq);
        }
      }
    }
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged)
    throw Error(errc::no_convergence, "Jacobi sweeps exhausted before reaching tolerance");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, k) = v(i, order[k]);
    fix_sign(res.eigenvectors, k);
  }
  return res;
}

std::size_t numerical_rank(const Matrix& a, double rank_tol) {
  const EigenResult eig = sym_eigen(a);
  double lam_max = 0.0;
  for (double lam : eig.eigenvalues) lam_max = std::max(lam_max, std::fabs(lam));
  std::size_t rank = 0;
  for (double lam : eig.eigenvalues)
    if (std::fabs(lam) > rank_tol * lam_max) ++rank;
  return rank;
}

Matrix kernel_basis(const Matrix& a, double rank_tol) {
  const std::size_t n = a.rows();
  const EigenResult eig = sym_eigen(a);
  double lam_max = 0.0;
  for (double lam : eig.eigenvalues) lam_max = std::max(lam_max, std::fabs(lam));
  std::vector<std::size_t> kernel_cols;
  for (std::size_t k = 0; k < n; ++k)
    if (std::fabs(eig.eigenvalues[k]) <= rank_tol * lam_max) kernel_cols.push_back(k);
  if (kernel_cols.empty()) throw Error(errc::empty_kernel, "matrix has full numerical rank");

  Matrix kernel(n, kernel_cols.size());
  for (std::size_t c = 0; c < kernel_cols.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) kernel(i, c) = eig.eigenvectors(i, kernel_cols[c]);
  return kernel;
}

Matrix inv_sqrt_psd(const Matrix& s, double tol) {
  const std::size_t n = s.rows();
  const EigenResult eig = sym_eigen(s);
  for (double lam : eig.eigenvalues)
    if (lam <= tol)
      throw Error(errc::not_positive_definite,
                  "eigenvalue " + std::to_string(lam) + " is not above tolerance");
  Matrix r(n, n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = eig.eigenvectors(i, k);
      if (vik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += w * vik * eig.eigenvectors(j, k);
    }
  }
  return r;
}

}  // namespace pframe
