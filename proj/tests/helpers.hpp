#pragma once

#include "pframe/configs.hpp"
#include "pframe/energies.hpp"
#include "pframe/matrix.hpp"
#include "pframe/rng.hpp"

#include <cmath>
#include <cstddef>
#include <random>

namespace testutil {

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline pframe::Matrix random_symmetric(std::size_t n, std::mt19937_64& eng, double scale = 1.0) {
  pframe::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = scale * (2.0 * pframe::uniform01(eng) - 1.0);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

inline pframe::Matrix random_spd(std::size_t n, std::mt19937_64& eng) {
  pframe::Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = pframe::gaussian(eng);
  pframe::Matrix s = b * b.transposed();
  for (std::size_t i = 0; i < n; ++i) s(i, i) += 0.5;  // keep well conditioned
  return s;
}

// Gram-Schmidt on Gaussian columns.
inline pframe::Matrix random_orthogonal(std::size_t n, std::mt19937_64& eng) {
  pframe::Matrix q(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) q(i, c) = pframe::gaussian(eng);
      for (std::size_t prev = 0; prev < c; ++prev) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, c) * q(i, prev);
        for (std::size_t i = 0; i < n; ++i) q(i, c) -= dot * q(i, prev);
      }
      double sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) sq += q(i, c) * q(i, c);
      if (sq > 1e-12) {
        const double inv = 1.0 / std::sqrt(sq);
        for (std::size_t i = 0; i < n; ++i) q(i, c) *= inv;
        break;
      }
    }
  }
  return q;
}

inline pframe::Configuration rotate(const pframe::Configuration& x, const pframe::Matrix& q) {
  pframe::Configuration out(x.dim, x.count);
  for (std::size_t i = 0; i < x.count; ++i)
    for (std::size_t r = 0; r < x.dim; ++r) {
      double acc = 0.0;
      for (std::size_t k = 0; k < x.dim; ++k) acc += q(r, k) * x.vec(i)[k];
      out.vec(i)[r] = acc;
    }
  return out;
}

// Energies are invariant under global rotations, so minimizers are only
// determined up to one; identify a repeated orthonormal basis by its Gram
// pattern: every pair of lines is either identical or orthogonal, and the
// line multiplicities match N = m + k d.
inline bool is_repeated_onb_lines(const pframe::Configuration& x, double tol = 1e-4) {
  const std::size_t n = x.count, d = x.dim;
  std::vector<int> line(n, -1);
  int classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (line[i] >= 0) continue;
    line[i] = classes++;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = std::fabs(pframe::inner(x, i, j));
      if (a >= 1.0 - tol)
        line[j] = line[i];
      else if (a > tol)
        return false;  // neither identical nor orthogonal
    }
  }
  if (classes != static_cast<int>(std::min(n, d))) return false;
  std::vector<std::size_t> sizes(classes, 0);
  for (int c : line) ++sizes[c];
  const std::size_t k = n / d, m = n % d;
  std::size_t big = 0, small = 0;
  for (std::size_t s : sizes) {
    if (s == k + 1)
      ++big;
    else if (s == k)
      ++small;
    else if (n >= d)
      return false;
  }
  if (n < d) return true;  // fewer vectors than directions: any orthonormal set
  return big == m && small == d - m;
}

// All pairwise inner products within tol of the target value (rotated
// simplex / equiangular detection).
inline bool all_inners_near(const pframe::Configuration& x, double target, double tol,
                            bool absolute_value = false) {
  for (std::size_t i = 0; i < x.count; ++i)
    for (std::size_t j = i + 1; j < x.count; ++j) {
      double t = pframe::inner(x, i, j);
      if (absolute_value) t = std::fabs(t);
      if (std::fabs(t - target) > tol) return false;
    }
  return true;
}

// Central finite differences of the exact energy along ambient coordinate
// perturbations retracted to the sphere; the independent check for the
// analytic tangential gradient.
inline pframe::Matrix fd_gradient(const pframe::Configuration& x, const pframe::Potential& f,
                                  double h = 1e-5) {
  pframe::Matrix g(x.dim, x.count);
  for (std::size_t i = 0; i < x.count; ++i) {
    for (std::size_t k = 0; k < x.dim; ++k) {
      auto shifted = [&](double delta) {
        pframe::Configuration y = x;
        y.vec(i)[k] += delta;
        double sq = 0.0;
        for (double v : y.vec(i)) sq += v * v;
        const double inv = 1.0 / std::sqrt(sq);
        for (double& v : y.vec(i)) v *= inv;
        return pframe::energy(pframe::gram(y), f).value;
      };
      g(k, i) = (shifted(h) - shifted(-h)) / (2.0 * h);
    }
  }
  return g;
}

}  // namespace testutil
