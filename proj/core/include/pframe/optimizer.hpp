#pragma once

#include "pframe/configs.hpp"
#include "pframe/energies.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pframe {

std::vector<double> default_epsilon_schedule();  // 1e-2 down to 1e-8, factor 10

struct OptimizerOptions {
  std::size_t restarts = 64;
  std::size_t max_iters = 5000;
  double step0 = 0.1;
  double armijo_beta = 0.5;
  double grad_tol = 1e-9;
  std::vector<double> epsilon_schedule = default_epsilon_schedule();
  std::uint64_t seed = 0;
  unsigned threads = 1;  // parallel restarts; results are thread-count invariant
};

struct TraceEntry {
  double epsilon = 0.0;
  std::size_t iterations = 0;
  double energy = 0.0;     // smoothed energy at this level's final point
  double grad_norm = 0.0;
  std::vector<double> accepted_energies;  // one per accepted step, nonincreasing
};

struct MinimizeResult {
  Configuration best;              // canonical form (sorted only for simplex_shift,
                                   // whose energy is not even in t)
  double energy = 0.0;             // evaluated with epsilon = 0
  bool converged = false;          // grad_tol reached at the smallest epsilon
  std::vector<TraceEntry> trace;   // winning restart only, one entry per level
  std::vector<double> restart_energies;  // epsilon = 0 energy per restart
  std::size_t restarts_hitting_best = 0; // within 1e-6 of the best energy
};

/// Deterministic multi-start projected gradient descent over (S^(d-1))^N
/// with smoothing continuation: every restart samples rotation-invariant
/// starting vectors from its own seeded stream, then runs Armijo
/// backtracking line search through the epsilon schedule, retracting by
/// renormalization. Restarts merge by (energy rounded to 1e-12, canonical
/// form), so results do not depend on the thread count.
MinimizeResult minimize_energy(std::size_t d, std::size_t n, const Potential& f,
                               const OptimizerOptions& opts);

struct SweepRow {
  double p = 0.0;
  double best_energy = 0.0;
  double construction_energy = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // best_energy - construction_energy
  std::size_t restarts_hitting_best = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Smallest grid p whose gap < -1e-6, i.e. where the minimizer beat the
  /// reference construction (empirical only; restarts prove nothing).
  std::optional<double> threshold_estimate;
};

/// One minimize_energy run per grid exponent, against a fixed reference
/// construction. `family` supplies the potential kind and its non-p
/// parameters; the grid supplies p. The bound column is the largest
/// applicable closed-form bound (pframe potentials only, 0 otherwise).
SweepResult sweep_p(std::size_t d, std::size_t n, const Potential& family,
                    std::span<const double> p_grid, const Configuration& construction,
                    const OptimizerOptions& opts);

struct RankedConstruction {
  std::string name;
  Configuration config;
  double energy = 0.0;
};

/// Energies of the named candidates plus, when N == d+1, the
/// simplex-plus-orthonormal hybrids (for each k in 1..d: the k-simplex in
/// a k-dimensional subspace padded with d-k orthonormal vectors).
/// Entries with identical canonical forms are merged; result sorted by
/// ascending energy. Throws dimension_mismatch on shape errors.
std::vector<RankedConstruction> compare_constructions(
    std::size_t d, std::size_t n, const Potential& f,
    const std::vector<std::pair<std::string, Configuration>>& candidates);

}  // namespace pframe
