#include "pframe/optimizer.hpp"

#include "pframe/bounds.hpp"
#include "pframe/errors.hpp"
#include "pframe/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace pframe {

namespace {

// Same ordered-pair sum as energy(), organized for the line-search inner
// loop (no Gram matrix allocation).
double pair_energy(const Configuration& x, const Potential& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.count; ++i)
    for (std::size_t j = i + 1; j < x.count; ++j)
      sum += 2.0 * eval_potential(f, inner(x, i, j));
  return sum;
}

void retract_step(const Configuration& x, const Matrix& grad, double step, Configuration& out) {
  const std::size_t d = x.dim, n = x.count;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = x.vec(i);
    auto oi = out.vec(i);
    double sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      oi[k] = xi[k] - step * grad(k, i);
      sq += oi[k] * oi[k];
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t k = 0; k < d; ++k) oi[k] *= inv;
  }
}

// Sign flips change t -> -t, so full canonicalization is only valid for
// potentials even in t; simplex_shift results keep their signs and are
// normalized by sorting alone.
Configuration normal_form(const Configuration& x, const Potential& f) {
  if (f.kind != Potential::Kind::simplex_shift) return canonicalize(x);
  std::vector<std::size_t> order(x.count);
  for (std::size_t i = 0; i < x.count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto a = x.vec(i), b = x.vec(j);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  Configuration sorted(x.dim, x.count);
  for (std::size_t i = 0; i < x.count; ++i) {
    const auto src = x.vec(order[i]);
    std::copy(src.begin(), src.end(), sorted.vec(i).begin());
  }
  return sorted;
}

struct RestartOutcome {
  Configuration final;
  Configuration canonical;
  double energy = 0.0;  // epsilon = 0
  bool converged = false;
  std::vector<TraceEntry> trace;
};

RestartOutcome run_restart(std::size_t d, std::size_t n, const Potential& f,
                           const OptimizerOptions& opts, std::size_t restart) {
  std::mt19937_64 eng = stream_engine(opts.seed, restart);
  Configuration x = random_configuration(d, n, eng);
  Configuration trial(d, n);

  RestartOutcome out;
  out.converged = true;
  for (double eps : opts.epsilon_schedule) {
    const Potential level = f.with_epsilon(eps);
    double value = pair_energy(x, level);
    double grad_norm = 0.0;
    double warm_step = opts.step0;
    std::size_t iter = 0;
    TraceEntry entry;
    entry.epsilon = eps;
    for (; iter < opts.max_iters; ++iter) {
      const Matrix grad = energy_gradient(x, level);
      grad_norm = grad.frobenius_norm();
      if (grad_norm <= opts.grad_tol) break;
      // Armijo backtracking; once decreases shrink below what double
      // precision can certify, fall back to plain nonincrease so the
      // iterate can keep contracting toward the minimizer.
      bool accepted = false;
      for (int relaxed = 0; relaxed < 2 && !accepted; ++relaxed) {
        double step = std::min(opts.step0, warm_step / opts.armijo_beta);
        while (step > 1e-18) {
          retract_step(x, grad, step, trial);
          const double trial_value = pair_energy(trial, level);
          const bool ok = relaxed ? trial_value <= value
                                  : trial_value <= value - 1e-4 * step * grad_norm * grad_norm;
          if (ok) {
            std::swap(x.coords, trial.coords);
            value = trial_value;
            warm_step = step;
            accepted = true;
            break;
          }
          step *= opts.armijo_beta;
        }
      }
      if (!accepted) break;  // stationary to machine precision
      entry.accepted_energies.push_back(value);
    }
    entry.iterations = iter;
    entry.energy = value;
    entry.grad_norm = grad_norm;
    out.trace.push_back(std::move(entry));
  }
  if (!out.trace.empty()) out.converged = out.trace.back().grad_norm <= opts.grad_tol;

  out.energy = energy(gram(x), f.with_epsilon(0.0)).value;
  out.canonical = normal_form(x, f);
  out.final = std::move(x);
  return out;
}

bool lex_less(const Configuration& a, const Configuration& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

double closed_form_bound(std::size_t d, std::size_t n, const Potential& f) {
  if (f.kind != Potential::Kind::pframe) return 0.0;
  double best = 0.0;
  if (f.p < 2.0)
    best = std::max(best, tangent_line_bound(n, d, f.p));
  else
    best = std::max(best, welch_energy_bound(n, d, f.p));
  if (d == 2 && f.p <= 1.3) best = std::max(best, planar_energy_bound(n, f.p));
  return best;
}

}  // namespace

std::vector<double> default_epsilon_schedule() {
  return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
}

MinimizeResult minimize_energy(std::size_t d, std::size_t n, const Potential& f,
                               const OptimizerOptions& opts) {
  if (d < 1 || n < 1) throw Error(errc::invariant_violation, "d and N must be >= 1");
  if (opts.restarts < 1 || opts.epsilon_schedule.empty())
    throw Error(errc::invariant_violation, "needs at least one restart and one epsilon level");
  if (!(opts.step0 > 0.0) || !(opts.armijo_beta > 0.0 && opts.armijo_beta < 1.0) ||
      !(opts.grad_tol > 0.0) || opts.max_iters < 1)
    throw Error(errc::invariant_violation, "optimizer options must be positive (beta in (0,1))");
  for (std::size_t i = 0; i < opts.epsilon_schedule.size(); ++i) {
    if (!(opts.epsilon_schedule[i] > 0.0) ||
        (i > 0 && opts.epsilon_schedule[i] >= opts.epsilon_schedule[i - 1]))
      throw Error(errc::invariant_violation, "epsilon schedule must be positive and decreasing");
  }

  std::vector<RestartOutcome> outcomes(opts.restarts);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(opts.restarts)));
  if (workers == 1) {
    for (std::size_t r = 0; r < opts.restarts; ++r) outcomes[r] = run_restart(d, n, f, opts, r);
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t r = next.fetch_add(1); r < opts.restarts; r = next.fetch_add(1))
        outcomes[r] = run_restart(d, n, f, opts, r);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  // Deterministic min-reduction in restart order, keyed by (energy within
  // 1e-12, canonical form); independent of the thread count.
  std::size_t best = 0;
  for (std::size_t r = 1; r < opts.restarts; ++r) {
    const double er = outcomes[r].energy, eb = outcomes[best].energy;
    if (er < eb - 1e-12 ||
        (std::fabs(er - eb) <= 1e-12 && lex_less(outcomes[r].canonical, outcomes[best].canonical)))
      best = r;
  }

  MinimizeResult result;
  result.energy = outcomes[best].energy;
  result.best = outcomes[best].canonical;
  result.converged = outcomes[best].converged;
  result.trace = outcomes[best].trace;
  result.restart_energies.reserve(opts.restarts);
  for (const RestartOutcome& o : outcomes) result.restart_energies.push_back(o.energy);
  for (double e : result.restart_energies)
    if (e <= result.energy + 1e-6) ++result.restarts_hitting_best;
  return result;
}

SweepResult sweep_p(std::size_t d, std::size_t n, const Potential& family,
                    std::span<const double> p_grid, const Configuration& construction,
                    const OptimizerOptions& opts) {
  if (construction.dim != d || construction.count != n)
    throw Error(errc::dimension_mismatch, "construction does not match (d, N)");
  const GramMatrix construction_gram = gram(construction);

  SweepResult result;
  result.rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const Potential fp = family.with_p(p).with_epsilon(0.0);
    const MinimizeResult run = minimize_energy(d, n, fp, opts);
    SweepRow row;
    row.p = p;
    row.best_energy = run.energy;
    row.construction_energy = energy(construction_gram, fp).value;
    row.bound = closed_form_bound(d, n, fp);
    row.gap = row.best_energy - row.construction_energy;
    row.restarts_hitting_best = run.restarts_hitting_best;
    if (!result.threshold_estimate && row.gap < -1e-6) result.threshold_estimate = p;
    result.rows.push_back(row);
  }
  return result;
}

std::vector<RankedConstruction> compare_constructions(
    std::size_t d, std::size_t n, const Potential& f,
    const std::vector<std::pair<std::string, Configuration>>& candidates) {
  std::vector<RankedConstruction> table;
  auto add = [&](const std::string& name, const Configuration& config) {
    if (config.dim != d || config.count != n)
      throw Error(errc::dimension_mismatch, "candidate '" + name + "' does not match (d, N)");
    const Configuration canon = normal_form(config, f);
    for (const RankedConstruction& existing : table)
      if (existing.config.coords == canon.coords) return;  // same up to symmetry
    table.push_back(RankedConstruction{name, canon, energy(gram(canon), f).value});
  };

  for (const auto& [name, config] : candidates) add(name, config);

  if (n == d + 1) {
    for (std::size_t k = 1; k <= d; ++k) {
      Configuration hybrid(d, n);
      const Configuration sk = simplex(k);
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t r = 0; r < k; ++r) hybrid.vec(i)[r] = sk.vec(i)[r];
      for (std::size_t i = k + 1; i < n; ++i) hybrid.vec(i)[i - 1] = 1.0;
      const std::string name = k == d ? "simplex" + std::to_string(k)
                                      : "simplex" + std::to_string(k) + "+onb" +
                                            std::to_string(d - k);
      add(name, hybrid);
    }
  }

  std::stable_sort(table.begin(), table.end(),
                   [](const RankedConstruction& a, const RankedConstruction& b) {
                     return a.energy < b.energy;
                   });
  return table;
}

}  // namespace pframe
