#pragma once

#include "pframe/configs.hpp"
#include "pframe/matrix.hpp"

#include <cstddef>

namespace pframe {

/// Pair potential evaluated at an inner product t in [-1, 1]:
///
///   pframe         u = t            (plain p-frame potential |t|^p)
///   simplex_shift  u = t + 1/d      (zero at the simplex angle -1/d)
///   etf_dev        u = t^2 - a^2    (zero at coherence +-a)
///
/// The value is |u|^p when epsilon == 0, else the smoothed form
/// (u^2 + eps^2)^(p/2) - eps^p, which is 0 at u = 0 and below |u|^p for
/// p <= 2.
struct Potential {
  enum class Kind { pframe, simplex_shift, etf_dev };

  Kind kind = Kind::pframe;
  double p = 1.0;
  std::size_t dim = 0;     // simplex_shift only
  double alpha_sq = 0.0;   // etf_dev only (squared coherence, < 1)
  double epsilon = 0.0;

  static Potential pframe(double p, double epsilon = 0.0);
  static Potential simplex_shift(std::size_t d, double p, double epsilon = 0.0);
  static Potential etf_dev(double alpha_sq, double p, double epsilon = 0.0);

  Potential with_p(double new_p) const;
  Potential with_epsilon(double eps) const;
};

/// Throws domain_error if |t| > 1 + 1e-9; t is clamped to [-1, 1] before
/// evaluation.
double eval_potential(const Potential& f, double t);

/// d/dt of the (smoothed) potential. With epsilon == 0 this is defined
/// only away from u = 0 when p < 2.
double potential_derivative(const Potential& f, double t);

struct EnergyReport {
  double value = 0.0;
  std::size_t pair_count = 0;
  double max_term = 0.0;
  Potential potential;
};

/// Sum of the potential over all N(N-1) ordered off-diagonal entries,
/// accumulated in a fixed row-major order.
EnergyReport energy(const GramMatrix& a, const Potential& f);

/// d x N matrix of tangential partials: column i is
/// (I - x_i x_i^T) * sum_{j != i} 2 f'(<x_i,x_j>) x_j.
/// Throws non_smooth_point when epsilon == 0 and p < 1, or when
/// epsilon == 0, p < 2 and some pair sits within 1e-12 of the
/// potential's kink.
Matrix energy_gradient(const Configuration& x, const Potential& f);

/// Sum over all ordered pairs of arccos |<x_i, x_j>| (diagonal terms are
/// 0); inner products clamped to [-1, 1].
double angle_sum(const Configuration& x);

/// Largest possible planar angle sum: pi N^2 / 4 for even N,
/// pi (N^2 - 1) / 4 for odd N.
double fejes_toth_bound(std::size_t n);

}  // namespace pframe
