#include "pframe/energies.hpp"

#include "pframe/errors.hpp"

#include <cmath>
#include <string>

namespace pframe {

namespace {

void validate(const Potential& f) {
  if (!(f.p > 0.0)) throw Error(errc::invariant_violation, "potential exponent must be > 0");
  if (!(f.epsilon >= 0.0)) throw Error(errc::invariant_violation, "epsilon must be >= 0");
  if (f.kind == Potential::Kind::simplex_shift && f.dim < 1)
    throw Error(errc::invariant_violation, "simplex_shift potential needs d >= 1");
  if (f.kind == Potential::Kind::etf_dev && !(f.alpha_sq >= 0.0 && f.alpha_sq < 1.0))
    throw Error(errc::invariant_violation, "etf_dev potential needs alpha^2 in [0, 1)");
}

double shifted_argument(const Potential& f, double t) {
  switch (f.kind) {
    case Potential::Kind::pframe: return t;
    case Potential::Kind::simplex_shift: return t + 1.0 / static_cast<double>(f.dim);
    case Potential::Kind::etf_dev: return t * t - f.alpha_sq;
  }
  return t;
}

double argument_derivative(const Potential& f, double t) {
  return f.kind == Potential::Kind::etf_dev ? 2.0 * t : 1.0;
}

double clamp_inner(double t) {
  if (std::fabs(t) > 1.0 + 1e-9)
    throw Error(errc::domain_error, "inner product " + std::to_string(t) + " outside [-1, 1]");
  return std::min(1.0, std::max(-1.0, t));
}

}  // namespace

Potential Potential::pframe(double p, double epsilon) {
  Potential f;
  f.kind = Kind::pframe;
  f.p = p;
  f.epsilon = epsilon;
  validate(f);
  return f;
}

Potential Potential::simplex_shift(std::size_t d, double p, double epsilon) {
  Potential f;
  f.kind = Kind::simplex_shift;
  f.dim = d;
  f.p = p;
  f.epsilon = epsilon;
  validate(f);
  return f;
}

Potential Potential::etf_dev(double alpha_sq, double p, double epsilon) {
  Potential f;
  f.kind = Kind::etf_dev;
  f.alpha_sq = alpha_sq;
  f.p = p;
  f.epsilon = epsilon;
  validate(f);
  return f;
}

Potential Potential::with_p(double new_p) const {
  Potential f = *this;
  f.p = new_p;
  validate(f);
  return f;
}

Potential Potential::with_epsilon(double eps) const {
  Potential f = *this;
  f.epsilon = eps;
  validate(f);
  return f;
}

double eval_potential(const Potential& f, double t) {
  const double u = shifted_argument(f, clamp_inner(t));
  if (f.epsilon == 0.0) return std::pow(std::fabs(u), f.p);
  const double e2 = f.epsilon * f.epsilon;
  return std::pow(u * u + e2, 0.5 * f.p) - std::pow(f.epsilon, f.p);
}

double potential_derivative(const Potential& f, double t) {
  const double tc = clamp_inner(t);
  const double u = shifted_argument(f, tc);
  const double du = argument_derivative(f, tc);
  if (f.epsilon > 0.0) {
    const double e2 = f.epsilon * f.epsilon;
    return f.p * u * std::pow(u * u + e2, 0.5 * f.p - 1.0) * du;
  }
  if (u == 0.0) return 0.0;  // meaningful only when p >= 2
  return f.p * std::copysign(std::pow(std::fabs(u), f.p - 1.0), u) * du;
}

EnergyReport energy(const GramMatrix& a, const Potential& f) {
  validate(f);
  const std::size_t n = a.size();
  EnergyReport report;
  report.potential = f;
  report.pair_count = n * (n - 1);
  double sum = 0.0, max_term = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double term = eval_potential(f, a.entries(i, j));
      sum += term;
      max_term = std::max(max_term, term);
    }
  }
  report.value = sum;
  report.max_term = max_term;
  return report;
}

Matrix energy_gradient(const Configuration& x, const Potential& f) {
  validate(f);
  if (f.epsilon == 0.0 && f.p < 1.0)
    throw Error(errc::non_smooth_point, "p < 1 requires a positive smoothing width");
  const std::size_t n = x.count, d = x.dim;

  Matrix inners(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    inners(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t = inner(x, i, j);
      inners(i, j) = t;
      inners(j, i) = t;
    }
  }
  if (f.epsilon == 0.0 && f.p < 2.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::fabs(shifted_argument(f, clamp_inner(inners(i, j)))) < 1e-12)
          throw Error(errc::non_smooth_point,
                      "pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") sits at the potential's kink");
  }

  Matrix grad(d, n, 0.0);
  std::vector<double> g(d);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double w = 2.0 * potential_derivative(f, inners(i, j));
      if (w == 0.0) continue;
      const auto xj = x.vec(j);
      for (std::size_t k = 0; k < d; ++k) g[k] += w * xj[k];
    }
    const auto xi = x.vec(i);
    double dot = 0.0;
    for (std::size_t k = 0; k < d; ++k) dot += g[k] * xi[k];
    for (std::size_t k = 0; k < d; ++k) grad(k, i) = g[k] - dot * xi[k];
  }
  return grad;
}

double angle_sum(const Configuration& x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.count; ++i) {
    for (std::size_t j = i + 1; j < x.count; ++j) {
      const double t = std::min(1.0, std::fabs(inner(x, i, j)));
      sum += 2.0 * std::acos(t);
    }
  }
  return sum;
}

double fejes_toth_bound(std::size_t n) {
  const double nn = static_cast<double>(n);
  const double pi = 3.14159265358979323846;
  return n % 2 == 0 ? pi * nn * nn / 4.0 : pi * (nn * nn - 1.0) / 4.0;
}

}  // namespace pframe
