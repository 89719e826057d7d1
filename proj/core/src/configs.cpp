#include "pframe/configs.hpp"

#include "pframe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pframe {

namespace {

double norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

// Orthonormal (Helmert) basis of the zero-sum hyperplane in R^m, one
// basis vector per row, m-1 rows of length m.
Matrix helmert_rows(std::size_t m) {
  Matrix h(m - 1, m, 0.0);
  for (std::size_t k = 1; k < m; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (std::size_t j = 0; j < k; ++j) h(k - 1, j) = scale;
    h(k - 1, k) = -static_cast<double>(k) * scale;
  }
  return h;
}

Configuration icosahedral_lines() {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  const double s = 1.0 / std::sqrt(1.0 + phi * phi);
  // One representative per antipodal vertex pair of the icosahedron.
  const double verts[6][3] = {
      {0.0, 1.0, phi}, {0.0, 1.0, -phi}, {1.0, phi, 0.0},
      {1.0, -phi, 0.0}, {phi, 0.0, 1.0}, {-phi, 0.0, 1.0},
  };
  Configuration x(3, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 3; ++k) x.vec(i)[k] = verts[i][k] * s;
  return x;
}

// 28 vectors in R^7: index by pairs {a,b} of {0..7}, take the vector in
// R^8 with 3 at positions a,b and -1 elsewhere (zero coordinate sum,
// squared norm 24), express it in an orthonormal basis of the zero-sum
// hyperplane and normalize.
Configuration maximal_etf_7_28() {
  const Matrix h = helmert_rows(8);
  Configuration x(7, 28);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      double raw[8];
      for (std::size_t k = 0; k < 8; ++k) raw[k] = -1.0;
      raw[a] = 3.0;
      raw[b] = 3.0;
      const double inv = 1.0 / std::sqrt(24.0);
      for (std::size_t r = 0; r < 7; ++r) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 8; ++k) acc += h(r, k) * raw[k];
        x.vec(idx)[r] = acc * inv;
      }
      ++idx;
    }
  }
  return x;
}

}  // namespace

void validate_unit_norms(const Configuration& x, double tol) {
  if (x.dim < 1 || x.count < 1)
    throw Error(errc::invariant_violation, "configuration must have d >= 1 and N >= 1");
  if (x.coords.size() != x.dim * x.count)
    throw Error(errc::invariant_violation, "coordinate buffer has wrong size");
  for (std::size_t i = 0; i < x.count; ++i) {
    for (double v : x.vec(i))
      if (!std::isfinite(v))
        throw Error(errc::invariant_violation, "non-finite coordinate in vector " + std::to_string(i));
    const double nm = norm(x.vec(i));
    if (std::fabs(nm - 1.0) > tol)
      throw Error(errc::invariant_violation,
                  "vector " + std::to_string(i) + " has norm " + std::to_string(nm));
  }
}

double inner(const Configuration& x, std::size_t i, std::size_t j) {
  double acc = 0.0;
  const double* a = x.coords.data() + i * x.dim;
  const double* b = x.coords.data() + j * x.dim;
  for (std::size_t k = 0; k < x.dim; ++k) acc += a[k] * b[k];
  return acc;
}

GramMatrix gram(const Configuration& x) {
  validate_unit_norms(x);
  const std::size_t n = x.count;
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = inner(x, i, j);
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return GramMatrix{std::move(g)};
}

Configuration repeated_onb(std::size_t d, std::size_t n) {
  if (d < 1 || n < 1) throw Error(errc::invariant_violation, "d and N must be >= 1");
  Configuration x(d, n);
  for (std::size_t j = 0; j < n; ++j) x.vec(j)[j % d] = 1.0;
  return x;
}

Configuration simplex(std::size_t d) {
  if (d < 1) throw Error(errc::invariant_violation, "d must be >= 1");
  const std::size_t m = d + 1;
  const Matrix h = helmert_rows(m);
  Configuration x(d, m);
  // Center e_1..e_{d+1}, express in the zero-sum hyperplane basis, and
  // renormalize; all vertices end up at mutual inner product -1/d.
  const double shift = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto out = x.vec(i);
    double sq = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double centered = (k == i ? 1.0 : 0.0) - shift;
        acc += h(r, k) * centered;
      }
      out[r] = acc;
      sq += acc * acc;
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t r = 0; r < d; ++r) out[r] *= inv;
  }
  return x;
}

Configuration etf(std::size_t d, std::size_t n) {
  if (n == d) return repeated_onb(d, d);
  if (n == d + 1) return simplex(d);
  if (d == 2 && n == 3) return simplex(2);
  if (d == 3 && n == 6) return icosahedral_lines();
  if (d == 7 && n == 28) return maximal_etf_7_28();
  throw Error(errc::unknown_etf, "no catalog ETF for d=" + std::to_string(d) +
                                     ", N=" + std::to_string(n));
}

Configuration repeat_config(const Configuration& base, std::size_t n) {
  if (n < 1) throw Error(errc::invariant_violation, "N must be >= 1");
  validate_unit_norms(base);
  Configuration x(base.dim, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto src = base.vec(j % base.count);
    std::copy(src.begin(), src.end(), x.vec(j).begin());
  }
  return x;
}

double coherence(const Configuration& x) {
  double best = 0.0;
  for (std::size_t i = 0; i < x.count; ++i)
    for (std::size_t j = i + 1; j < x.count; ++j)
      best = std::max(best, std::fabs(inner(x, i, j)));
  return best;
}

TightFrameCheck is_tight_frame(const Configuration& x, double tol) {
  const std::size_t d = x.dim;
  Matrix frame_op(d, d, 0.0);
  double norm_sum = 0.0;
  for (std::size_t i = 0; i < x.count; ++i) {
    const auto v = x.vec(i);
    for (std::size_t a = 0; a < d; ++a) {
      norm_sum += v[a] * v[a];
      for (std::size_t b = 0; b < d; ++b) frame_op(a, b) += v[a] * v[b];
    }
  }
  const double c = norm_sum / static_cast<double>(d);
  double dev = 0.0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      dev = std::max(dev, std::fabs(frame_op(a, b) - (a == b ? c : 0.0)));
  return TightFrameCheck{dev <= tol, c};
}

bool is_etf(const Configuration& x, double tol) {
  if (x.count < 2) throw Error(errc::invariant_violation, "N must be >= 2");
  if (!is_tight_frame(x, tol).tight) return false;
  double lo = 2.0, hi = 0.0;
  for (std::size_t i = 0; i < x.count; ++i) {
    for (std::size_t j = i + 1; j < x.count; ++j) {
      const double a = std::fabs(inner(x, i, j));
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  return hi - lo <= tol;
}

Configuration canonicalize(const Configuration& x) {
  Configuration out = x;
  for (std::size_t i = 0; i < out.count; ++i) {
    auto v = out.vec(i);
    for (std::size_t k = 0; k < out.dim; ++k) {
      if (std::fabs(v[k]) > 1e-9) {
        if (v[k] < 0.0)
          for (std::size_t r = 0; r < out.dim; ++r) v[r] = -v[r];
        break;
      }
    }
  }
  std::vector<std::size_t> order(out.count);
  for (std::size_t i = 0; i < out.count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto a = out.vec(i), b = out.vec(j);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  Configuration sorted(out.dim, out.count);
  for (std::size_t i = 0; i < out.count; ++i) {
    const auto src = out.vec(order[i]);
    std::copy(src.begin(), src.end(), sorted.vec(i).begin());
  }
  return sorted;
}

}  // namespace pframe
