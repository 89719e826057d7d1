#pragma once

#include "pframe/configs.hpp"
#include "pframe/gale.hpp"

#include <cstddef>
#include <vector>

namespace pframe {

/// Per-weight cost of the auxiliary problem: (t / (c - t))^(p/2) on
/// [0, c), 0 at t = 0, +inf at t >= c.
double weight_cost(double c, double p, double t);

enum class MStarFamily {
  equal_split,           // t_1 = ... = t_k = 1/k, rest 0
  split_with_remainder,  // t_1 = ... = t_k = x, t_{k+1} = 1 - kx, rest 0
  oracle,                // numeric fallback beat both families (p < 1 only)
};

/// Minimum of sum_i weight_cost(c, p, t_i) over the simplex
/// { sum t_i = 1, 0 <= t_i < c }, with the minimizing weights and the
/// candidate family that produced them.
struct MStarSolution {
  double value = 0.0;
  std::vector<double> weights;
  MStarFamily family = MStarFamily::equal_split;
  std::size_t k = 0;
  double x = 0.0;  // split_with_remainder only
  double c = 0.0;
  double p = 0.0;
  std::size_t n = 0;
  bool oracle_checked = false;   // p < 1 fallback ran
  bool oracle_improved = false;  // ... and found a smaller value
};

/// Structural solver: enumerates the equal-split family over all feasible
/// support sizes and the split-with-remainder family over a dense grid
/// (1e4 points per k) with local refinement to 1e-12. The enumeration is
/// provably exhaustive for p in [1, 2]; for p < 1 the numeric oracle is
/// appended as a cross-check when N <= 8. Throws infeasible_c when
/// c <= 1/N.
MStarSolution mstar(double c, double p, std::size_t n);

/// Independent check: multi-start projected gradient on the capped
/// simplex (200 seeded random starts per support size) over all support
/// sizes. N <= 8 only (too_large otherwise).
double mstar_oracle(double c, double p, std::size_t n);

/// Energy bound through the auxiliary problem at c = 1/(N-d):
/// M(c,p,N) for p in [1,2], (N-1)^(1-p/2) M(c,p,N) for p > 2.
/// Throws not_applicable when N <= d, bad_exponent when p < 1.
double mstar_energy_bound(std::size_t n, std::size_t d, double p);

/// Closed-form bound for p in (0,2): 2(N-d) / (p^(p/2) (2-p)^((2-p)/2))
/// for p >= 1, plain 2(N-d) for p < 1; 0 when N <= d. Obtained by
/// replacing the weight cost with its best linear minorant through the
/// origin.
double tangent_line_bound(std::size_t n, std::size_t d, double p);

/// Closed-form bound for p >= 2: N(N-1) ((N-d)/(d(N-1)))^(p/2), attained
/// exactly by equiangular tight frames; 0 when N <= d. Throws
/// bad_exponent for p < 2.
double welch_energy_bound(std::size_t n, std::size_t d, double p);

/// Coherence lower bound sqrt((N-d)/(d(N-1))); 0 when N <= d.
double welch_bound(std::size_t n, std::size_t d);

enum class Field { real, complex_field };

/// Largest possible ETF size: d(d+1)/2 real, d^2 complex.
std::size_t gerzon_bound(std::size_t d, Field field);

/// p_m = 2 log((2m+1)/(2m)) / log((m+1)/m), the largest exponent at
/// which the equal-split objective ties at supports 2m and 2m+1.
double p_threshold(std::size_t m);

/// Equal-split objective at real support size x > m: x (m/(x-m))^(p/2).
double equal_split_objective(std::size_t m, double x, double p);

/// Planar (d = 2) bound for p in (0, 1.3]: N(N-2)/2 for even N,
/// (N-1)^2/2 for odd N. Throws bad_exponent when p > 1.3.
double planar_energy_bound(std::size_t n, double p);

/// Row-wise certificate residuals LHS_i - RHS_i, where
/// LHS_i = (sum_{j != i} |A_ij|^p)^(1/p) and
/// RHS_i = sqrt(t_i / (1/(N-d) - t_i)), scaled by (N-1)^(1/p - 1/2) for
/// p > 2. All residuals are >= 0 (up to roundoff) for any dual built
/// from A. Throws mismatched_dual if G does not match A.
std::vector<double> per_row_certificate(const GramMatrix& a, const GaleDual& g, double p);

}  // namespace pframe
