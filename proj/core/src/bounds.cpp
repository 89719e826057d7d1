#include "pframe/bounds.hpp"

#include "pframe/errors.hpp"
#include "pframe/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pframe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double weight_cost_derivative(double c, double p, double t) {
  t = std::max(t, 1e-13);  // the derivative blows up at 0 for p < 2
  if (t >= c) return kInf;
  const double ratio = t / (c - t);
  return 0.5 * p * std::pow(ratio, 0.5 * p - 1.0) * c / ((c - t) * (c - t));
}

struct Candidate {
  double value = kInf;
  MStarFamily family = MStarFamily::equal_split;
  std::size_t k = 0;
  double x = 0.0;
};

// Objective of the split-with-remainder family at a given x.
double remainder_value(double c, double p, std::size_t k, double x) {
  const double rest = std::max(0.0, 1.0 - static_cast<double>(k) * x);
  return static_cast<double>(k) * weight_cost(c, p, x) + weight_cost(c, p, rest);
}

// Golden-section refinement of a bracket around a grid minimum.
double golden_refine(double c, double p, std::size_t k, double lo, double hi) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = remainder_value(c, p, k, x1), f2 = remainder_value(c, p, k, x2);
  while (b - a > 1e-12) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = remainder_value(c, p, k, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = remainder_value(c, p, k, x2);
    }
  }
  return 0.5 * (a + b);
}

struct OracleSolution {
  double value = kInf;
  std::vector<double> weights;
};

// Euclidean projection onto { 0 <= t_i <= cap, sum t_i = 1 } by bisection
// on the shift multiplier.
void project_capped_simplex(std::vector<double>& t, double cap) {
  double lo = -2.0, hi = 2.0;
  for (double v : t) {
    lo = std::min(lo, v - cap - 1.0);
    hi = std::max(hi, v);
  }
  auto mass = [&](double tau) {
    double s = 0.0;
    for (double v : t) s += std::clamp(v - tau, 0.0, cap);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mass(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  const double tau = 0.5 * (lo + hi);
  for (double& v : t) v = std::clamp(v - tau, 0.0, cap);
}

OracleSolution oracle_solve(double c, double p, std::size_t n) {
  if (n > 8) throw Error(errc::too_large, "oracle supports N <= 8");
  if (!(c * static_cast<double>(n) > 1.0))
    throw Error(errc::infeasible_c, "c must exceed 1/N");
  if (!(p > 0.0)) throw Error(errc::bad_exponent, "p must be > 0");

  const double cap = c * (1.0 - 1e-9);
  auto objective = [&](const std::vector<double>& t) {
    double s = 0.0;
    for (double v : t) s += weight_cost(c, p, v);
    return s;
  };

  OracleSolution best;
  // Deterministic stream, independent of any user-facing seed.
  std::mt19937_64 eng = stream_engine(0x6f7261636c65ULL, 0);

  for (std::size_t support = 1; support <= n; ++support) {
    if (!(static_cast<double>(support) * cap > 1.0)) continue;  // cannot sum to 1
    for (int start = 0; start < 200; ++start) {
      std::vector<double> t(support);
      double sum = 0.0;
      for (double& v : t) {
        v = -std::log(std::max(uniform01(eng), 1e-300));  // Dirichlet(1,..,1)
        sum += v;
      }
      for (double& v : t) v /= sum;
      project_capped_simplex(t, cap);

      double fx = objective(t);
      double step = 0.25 * c;
      std::vector<double> trial(support);
      for (int iter = 0; iter < 400 && step > 1e-15; ++iter) {
        for (std::size_t i = 0; i < support; ++i)
          trial[i] = t[i] - step * weight_cost_derivative(c, p, t[i]);
        project_capped_simplex(trial, cap);
        const double ft = objective(trial);
        if (ft < fx - 1e-15) {
          t.swap(trial);
          fx = ft;
          step *= 1.2;
        } else {
          step *= 0.5;
        }
      }
      if (fx < best.value) {
        best.value = fx;
        best.weights.assign(n, 0.0);
        std::copy(t.begin(), t.end(), best.weights.begin());
      }
    }
  }
  return best;
}

}  // namespace

double weight_cost(double c, double p, double t) {
  if (t <= 0.0) return 0.0;
  if (t >= c) return kInf;
  return std::pow(t / (c - t), 0.5 * p);
}

MStarSolution mstar(double c, double p, std::size_t n) {
  if (n < 1) throw Error(errc::invariant_violation, "N must be >= 1");
  if (!(p > 0.0)) throw Error(errc::bad_exponent, "p must be > 0");
  if (!(c * static_cast<double>(n) > 1.0))
    throw Error(errc::infeasible_c,
                "c = " + std::to_string(c) + " <= 1/N makes the constraint set empty");

  Candidate best;

  // Equal split over k nonzero weights; feasible when 1/k < c.
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = 1.0 / static_cast<double>(k);
    if (!(t < c)) continue;
    const double value = static_cast<double>(k) * weight_cost(c, p, t);
    if (value < best.value) best = Candidate{value, MStarFamily::equal_split, k, t};
  }

  // k equal weights x plus one remainder below the inflection point
  // alpha = c(2-p)/4; empty for p >= 2.
  const double alpha = c * (2.0 - p) / 4.0;
  if (alpha > 0.0) {
    const int grid = 10000;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      const double kd = static_cast<double>(k);
      const double lo = std::max(alpha, (1.0 - alpha) / kd);
      const double hi = std::min(c, 1.0 / kd);
      if (!(lo < hi)) continue;
      double best_x = lo, best_v = kInf;
      for (int j = 0; j <= grid; ++j) {
        const double x = lo + (hi - lo) * static_cast<double>(j) / grid;
        const double v = remainder_value(c, p, k, x);
        if (v < best_v) {
          best_v = v;
          best_x = x;
        }
      }
      const double h = (hi - lo) / grid;
      const double rx = golden_refine(c, p, k, std::max(lo, best_x - h), std::min(hi, best_x + h));
      const double rv = remainder_value(c, p, k, rx);
      if (rv < best_v) {
        best_v = rv;
        best_x = rx;
      }
      if (best_v < best.value)
        best = Candidate{best_v, MStarFamily::split_with_remainder, k, best_x};
    }
  }

  MStarSolution sol;
  sol.c = c;
  sol.p = p;
  sol.n = n;
  sol.value = best.value;
  sol.family = best.family;
  sol.k = best.k;
  sol.x = best.family == MStarFamily::split_with_remainder ? best.x : 0.0;
  sol.weights.assign(n, 0.0);
  if (best.family == MStarFamily::equal_split) {
    for (std::size_t i = 0; i < best.k; ++i) sol.weights[i] = 1.0 / static_cast<double>(best.k);
  } else {
    for (std::size_t i = 0; i < best.k; ++i) sol.weights[i] = best.x;
    sol.weights[best.k] = std::max(0.0, 1.0 - static_cast<double>(best.k) * best.x);
  }

  // The family enumeration is proved exhaustive for p in [1,2] only; for
  // smaller p fall back on the numeric oracle when it is affordable.
  if (p < 1.0 && n <= 8) {
    sol.oracle_checked = true;
    const OracleSolution numeric = oracle_solve(c, p, n);
    if (numeric.value < sol.value - 1e-9) {
      sol.oracle_improved = true;
      sol.family = MStarFamily::oracle;
      sol.value = numeric.value;
      sol.weights = numeric.weights;
      sol.k = 0;
      sol.x = 0.0;
    }
  }
  return sol;
}

double mstar_oracle(double c, double p, std::size_t n) {
  return oracle_solve(c, p, n).value;
}

double mstar_energy_bound(std::size_t n, std::size_t d, double p) {
  if (n <= d) throw Error(errc::not_applicable, "needs N > d");
  if (p < 1.0) throw Error(errc::bad_exponent, "needs p >= 1");
  const double c = 1.0 / static_cast<double>(n - d);
  const double m = mstar(c, p, n).value;
  if (p <= 2.0) return m;
  return std::pow(static_cast<double>(n - 1), 1.0 - 0.5 * p) * m;
}

double tangent_line_bound(std::size_t n, std::size_t d, double p) {
  if (!(p > 0.0 && p < 2.0)) throw Error(errc::bad_exponent, "needs p in (0, 2)");
  if (n <= d) return 0.0;
  const double excess = 2.0 * static_cast<double>(n - d);
  if (p < 1.0) return excess;
  return excess / (std::pow(p, 0.5 * p) * std::pow(2.0 - p, 0.5 * (2.0 - p)));
}

double welch_energy_bound(std::size_t n, std::size_t d, double p) {
  if (p < 2.0) throw Error(errc::bad_exponent, "needs p >= 2");
  if (n <= d) return 0.0;
  const double nd = static_cast<double>(n), dd = static_cast<double>(d);
  return nd * (nd - 1.0) * std::pow((nd - dd) / (dd * (nd - 1.0)), 0.5 * p);
}

double welch_bound(std::size_t n, std::size_t d) {
  if (n <= d) return 0.0;
  const double nd = static_cast<double>(n), dd = static_cast<double>(d);
  return std::sqrt((nd - dd) / (dd * (nd - 1.0)));
}

std::size_t gerzon_bound(std::size_t d, Field field) {
  if (d < 1) throw Error(errc::invariant_violation, "d must be >= 1");
  return field == Field::real ? d * (d + 1) / 2 : d * d;
}

double p_threshold(std::size_t m) {
  if (m < 1) throw Error(errc::invariant_violation, "m must be >= 1");
  const double md = static_cast<double>(m);
  return 2.0 * std::log((2.0 * md + 1.0) / (2.0 * md)) / std::log((md + 1.0) / md);
}

double equal_split_objective(std::size_t m, double x, double p) {
  const double md = static_cast<double>(m);
  if (!(x > md)) throw Error(errc::domain_error, "needs x > m");
  return x * std::pow(md / (x - md), 0.5 * p);
}

double planar_energy_bound(std::size_t n, double p) {
  if (!(p > 0.0 && p <= 1.3)) throw Error(errc::bad_exponent, "needs p in (0, 1.3]");
  const double nd = static_cast<double>(n);
  if (n % 2 == 0) return std::max(0.0, nd * (nd - 2.0) / 2.0);
  return (nd - 1.0) * (nd - 1.0) / 2.0;
}

std::vector<double> per_row_certificate(const GramMatrix& a, const GaleDual& g, double p) {
  const std::size_t n = a.size();
  if (g.n() != n) throw Error(errc::dimension_mismatch, "dual size does not match Gram size");
  if (p < 1.0) throw Error(errc::bad_exponent, "needs p >= 1");

  const Matrix m = g.y.transposed() * g.y;
  for (std::size_t i = 0; i < n; ++i) {
    double row = m(i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) row += a.entries(i, j) * m(i, j);
    if (std::fabs(row) > 1e-6)
      throw Error(errc::mismatched_dual,
                  "kernel identity residual " + std::to_string(std::fabs(row)) + " at row " +
                      std::to_string(i));
  }

  const double c = g.frame_constant;
  const double scale = p > 2.0 ? std::pow(static_cast<double>(n - 1), 1.0 / p - 0.5) : 1.0;
  std::vector<double> residuals(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum += std::pow(std::fabs(a.entries(i, j)), p);
    const double lhs = std::pow(sum, 1.0 / p);
    const double ti = g.weights[i];
    const double rhs = scale * std::sqrt(ti / std::max(c - ti, 1e-300));
    residuals[i] = lhs - rhs;
  }
  return residuals;
}

}  // namespace pframe
