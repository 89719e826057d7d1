// pframe: energies, bounds, duals, and minimizers for unit-vector
// configurations. JSON on stdout; optional CSV / vector-file outputs, each
// accompanied by a .manifest.json for reproduction.

#include "pframe/bounds.hpp"
#include "pframe/configs.hpp"
#include "pframe/continuous.hpp"
#include "pframe/energies.hpp"
#include "pframe/errors.hpp"
#include "pframe/gale.hpp"
#include "pframe/optimizer.hpp"
#include "pframe/rational.hpp"
#include "pframe/vecfile.hpp"
#include "pframe/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace pframe;

namespace {

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
      return 2;
    case errc::no_convergence:
    case errc::numerical_failure:
      return 4;
    default:
      return 3;  // data/invariant violations
  }
}

double parse_real(const std::string& text) {
  // accept decimals and exact fractions like 1/9
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) return Rational::parse(text).to_double();
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad number '" + text + "'");
  }
}

long long parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad count '" + text + "'");
  }
}

// Constructor mini-language:
//   onb:DxN | simplex:D | etf:D,N | repeat:(SPEC)xN | file:PATH
Configuration build_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(errc::parse_error, "constructor spec '" + spec + "' has no ':'");
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (head == "file") return load_vectors(rest);
  if (head == "onb") {
    const std::size_t x = rest.find('x');
    if (x == std::string::npos) throw Error(errc::parse_error, "onb wants DxN, got '" + rest + "'");
    return repeated_onb(parse_int(rest.substr(0, x)), parse_int(rest.substr(x + 1)));
  }
  if (head == "simplex") return simplex(parse_int(rest));
  if (head == "etf") {
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos)
      throw Error(errc::parse_error, "etf wants D,N, got '" + rest + "'");
    return etf(parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1)));
  }
  if (head == "repeat") {
    if (rest.empty() || rest.front() != '(')
      throw Error(errc::parse_error, "repeat wants (SPEC)xN, got '" + rest + "'");
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos || close + 1 >= rest.size() || rest[close + 1] != 'x')
      throw Error(errc::parse_error, "repeat wants (SPEC)xN, got '" + rest + "'");
    const Configuration base = build_spec(rest.substr(1, close - 1));
    return repeat_config(base, parse_int(rest.substr(close + 2)));
  }
  throw Error(errc::parse_error, "unknown constructor '" + head + "'");
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string utc_now() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// One manifest per output file; the only place a timestamp appears.
void write_manifest(const std::string& output_path, const std::string& command,
                    const std::map<std::string, std::string>& parameters, std::uint64_t seed,
                    const std::vector<std::string>& outputs) {
  json m;
  m["schema"] = 1;
  m["command"] = command;
  m["parameters"] = parameters;
  m["seed"] = seed;
  m["artifact_version"] = kVersion;
  m["outputs"] = outputs;
  m["created_utc"] = utc_now();
  std::ofstream out(output_path + ".manifest.json");
  if (!out) throw Error(errc::parse_error, "cannot write '" + output_path + ".manifest.json'");
  out << m.dump(2) << "\n";
}

struct PotentialFlags {
  std::string kind = "pframe";
  double p = 1.0;
  std::string alpha2 = "0";
  double epsilon = 0.0;

  void attach(CLI::App* cmd, bool require_p = true) {
    cmd->add_option("--potential", kind, "pframe | simplex-shift | etf-dev")
        ->check(CLI::IsMember({"pframe", "simplex-shift", "etf-dev"}));
    auto* popt = cmd->add_option("--p", p, "potential exponent p > 0");
    if (require_p) popt->required();
    cmd->add_option("--alpha2", alpha2, "squared coherence for etf-dev (decimal or a/b)");
    cmd->add_option("--epsilon", epsilon, "smoothing width (default 0)");
  }

  Potential build(std::size_t d) const {
    if (kind == "pframe") return Potential::pframe(p, epsilon);
    if (kind == "simplex-shift") return Potential::simplex_shift(d, p, epsilon);
    return Potential::etf_dev(parse_real(alpha2), p, epsilon);
  }

  void describe(std::map<std::string, std::string>& params) const {
    params["potential"] = kind;
    params["p"] = format_g17(p);
    if (kind == "etf-dev") params["alpha2"] = alpha2;
    if (epsilon != 0.0) params["epsilon"] = format_g17(epsilon);
  }
};

json potential_json(const Potential& f) {
  json j;
  switch (f.kind) {
    case Potential::Kind::pframe: j["kind"] = "pframe"; break;
    case Potential::Kind::simplex_shift:
      j["kind"] = "simplex-shift";
      j["d"] = f.dim;
      break;
    case Potential::Kind::etf_dev:
      j["kind"] = "etf-dev";
      j["alpha_sq"] = f.alpha_sq;
      break;
  }
  j["p"] = f.p;
  j["epsilon"] = f.epsilon;
  return j;
}

// Every closed-form or solver bound that applies to this (d, N, potential).
json applicable_bounds(std::size_t d, std::size_t n, const Potential& f, double value) {
  json bounds = json::object();
  auto put = [&](const char* name, double b) {
    bounds[name] = json{{"value", b}, {"margin", value - b}};
  };
  if (f.kind != Potential::Kind::pframe) return bounds;
  if (f.p < 2.0)
    put("tangent_line", tangent_line_bound(n, d, f.p));
  else
    put("welch_energy", welch_energy_bound(n, d, f.p));
  if (n > d && f.p >= 1.0) put("mstar", mstar_energy_bound(n, d, f.p));
  if (d == 2 && f.p <= 1.3) put("planar", planar_energy_bound(n, f.p));
  return bounds;
}

json vectors_json(const Configuration& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.count; ++i) {
    json row = json::array();
    for (double v : x.vec(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct OptimizerFlags {
  OptimizerOptions opts;
  double eps_start = 1e-2;
  double eps_end = 1e-8;

  void attach(CLI::App* cmd) {
    cmd->add_option("--restarts", opts.restarts, "independent restarts (default 64)");
    cmd->add_option("--max-iters", opts.max_iters, "iteration cap per smoothing level");
    cmd->add_option("--step0", opts.step0, "initial line-search step");
    cmd->add_option("--beta", opts.armijo_beta, "backtracking shrink factor");
    cmd->add_option("--grad-tol", opts.grad_tol, "tangential gradient tolerance");
    cmd->add_option("--eps-start", eps_start, "first smoothing width");
    cmd->add_option("--eps-end", eps_end, "last smoothing width");
    cmd->add_option("--seed", opts.seed, "rng seed (default 0)");
    cmd->add_option("--threads", opts.threads, "parallel restart cap (default 1)");
  }

  OptimizerOptions build() const {
    OptimizerOptions o = opts;
    o.epsilon_schedule.clear();
    for (double eps = eps_start; eps >= eps_end * (1.0 - 1e-12); eps /= 10.0)
      o.epsilon_schedule.push_back(eps);
    if (o.epsilon_schedule.empty()) o.epsilon_schedule.push_back(eps_end);
    return o;
  }

  void describe(std::map<std::string, std::string>& params) const {
    params["restarts"] = std::to_string(opts.restarts);
    params["max_iters"] = std::to_string(opts.max_iters);
    params["seed"] = std::to_string(opts.seed);
    params["eps_start"] = format_g17(eps_start);
    params["eps_end"] = format_g17(eps_end);
  }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand handlers ----

int cmd_energy(const std::string& spec, const PotentialFlags& pf) {
  const Configuration x = build_spec(spec);
  const Potential f = pf.build(x.dim);
  const EnergyReport report = energy(gram(x), f);
  json j;
  j["schema"] = 1;
  j["command"] = "energy";
  j["d"] = x.dim;
  j["n"] = x.count;
  j["potential"] = potential_json(f);
  j["value"] = report.value;
  j["pair_count"] = report.pair_count;
  j["max_term"] = report.max_term;
  j["coherence"] = coherence(x);
  j["bounds"] = applicable_bounds(x.dim, x.count, f, report.value);
  emit(j);
  return 0;
}

int cmd_certify(std::size_t n, std::size_t d, double p) {
  json bounds = json::object();
  if (p > 0.0 && p < 2.0) bounds["tangent_line"] = tangent_line_bound(n, d, p);
  if (p >= 2.0) bounds["welch_energy"] = welch_energy_bound(n, d, p);
  if (n > d && p >= 1.0) bounds["mstar"] = mstar_energy_bound(n, d, p);
  bounds["welch_coherence"] = welch_bound(n, d);
  bounds["gerzon_real"] = gerzon_bound(d, Field::real);
  bounds["gerzon_complex"] = gerzon_bound(d, Field::complex_field);
  if (n > d && n - d < d) bounds["p_threshold"] = p_threshold(n - d);
  if (d == 2 && p > 0.0 && p <= 1.3) bounds["planar"] = planar_energy_bound(n, p);

  json j;
  j["schema"] = 1;
  j["command"] = "certify";
  j["n"] = n;
  j["d"] = d;
  j["p"] = p;
  j["bounds"] = bounds;
  emit(j);
  return 0;
}

int cmd_gale(const std::string& spec, double tol, const std::string& out_y,
             const std::string& out_weights, std::uint64_t seed) {
  const Configuration x = build_spec(spec);
  const GramMatrix a = gram(x);
  const GaleDual g = gale_dual(a, x.dim, tol);
  const GaleReport report = verify_gale(a, g, tol);

  std::map<std::string, std::string> params{{"input", spec}, {"tol", format_g17(tol)}};
  std::vector<std::string> outputs;
  if (!out_y.empty()) outputs.push_back(out_y);
  if (!out_weights.empty()) outputs.push_back(out_weights);
  if (!out_y.empty()) {
    std::ofstream out(out_y);
    if (!out) throw Error(errc::parse_error, "cannot write '" + out_y + "'");
    // one dual vector y_i per line
    std::vector<double> rows(g.n() * g.codim());
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t k = 0; k < g.codim(); ++k) rows[i * g.codim() + k] = g.y(k, i);
    write_rows(out, g.n(), g.codim(), rows, "gale dual vectors, one per line");
    write_manifest(out_y, "gale", params, seed, outputs);
  }
  if (!out_weights.empty()) {
    std::ofstream out(out_weights);
    if (!out) throw Error(errc::parse_error, "cannot write '" + out_weights + "'");
    write_rows(out, g.weights.size(), 1, g.weights, "gale dual weights t_i");
    write_manifest(out_weights, "gale", params, seed, outputs);
  }

  json j;
  j["schema"] = 1;
  j["command"] = "gale";
  j["n"] = g.n();
  j["d"] = x.dim;
  j["frame_constant"] = g.frame_constant;
  j["weights"] = g.weights;
  j["residuals"] = json{{"kernel", report.kernel_residual},
                        {"tightness", report.tightness_residual},
                        {"weight_sum", report.weight_sum_residual}};
  j["pass"] = report.pass;
  j["outputs"] = outputs;
  emit(j);
  return 0;
}

int cmd_mstar(double c, double p, std::size_t n) {
  const MStarSolution sol = mstar(c, p, n);
  json j;
  j["schema"] = 1;
  j["command"] = "mstar";
  j["c"] = sol.c;
  j["p"] = sol.p;
  j["n"] = sol.n;
  j["value"] = sol.value;
  switch (sol.family) {
    case MStarFamily::equal_split: j["family"] = "equal_split"; break;
    case MStarFamily::split_with_remainder: j["family"] = "split_with_remainder"; break;
    case MStarFamily::oracle: j["family"] = "oracle"; break;
  }
  j["k"] = sol.k;
  if (sol.family == MStarFamily::split_with_remainder) j["x"] = sol.x;
  j["weights"] = sol.weights;
  j["oracle_checked"] = sol.oracle_checked;
  j["oracle_improved"] = sol.oracle_improved;
  emit(j);
  return 0;
}

int cmd_minimize(std::size_t d, std::size_t n, const PotentialFlags& pf,
                 const OptimizerFlags& of, const std::string& out_path) {
  const Potential f = pf.build(d);
  const OptimizerOptions opts = of.build();
  const MinimizeResult run = minimize_energy(d, n, f, opts);

  if (!out_path.empty()) {
    save_vectors(out_path, run.best);
    std::map<std::string, std::string> params{{"d", std::to_string(d)}, {"n", std::to_string(n)}};
    pf.describe(params);
    of.describe(params);
    write_manifest(out_path, "minimize", params, opts.seed, {out_path});
  }

  json trace = json::array();
  for (const TraceEntry& t : run.trace)
    trace.push_back(json{{"epsilon", t.epsilon},
                         {"iterations", t.iterations},
                         {"energy", t.energy},
                         {"grad_norm", t.grad_norm}});
  json j;
  j["schema"] = 1;
  j["command"] = "minimize";
  j["d"] = d;
  j["n"] = n;
  j["potential"] = potential_json(f);
  j["seed"] = opts.seed;
  j["energy"] = run.energy;
  j["converged"] = run.converged;
  j["restarts"] = opts.restarts;
  j["restarts_hitting_best"] = run.restarts_hitting_best;
  j["bounds"] = applicable_bounds(d, n, f.with_epsilon(0.0), run.energy);
  j["coherence"] = coherence(run.best);
  j["vectors"] = vectors_json(run.best);
  j["trace"] = trace;
  emit(j);
  return 0;
}

int cmd_sweep(std::size_t d, std::size_t n, const PotentialFlags& pf, const OptimizerFlags& of,
              double p_min, double p_max, double p_step, const std::string& p_grid_text,
              const std::string& construct_spec, const std::string& csv_path) {
  std::vector<double> grid;
  if (!p_grid_text.empty()) {
    std::size_t pos = 0;
    while (pos < p_grid_text.size()) {
      const std::size_t comma = p_grid_text.find(',', pos);
      const std::string tok = p_grid_text.substr(pos, comma - pos);
      grid.push_back(parse_real(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    if (!(p_step > 0.0)) throw Error(errc::parse_error, "--p-step must be positive");
    for (double p = p_min; p <= p_max + 1e-12; p += p_step) grid.push_back(p);
  }
  if (grid.empty()) throw Error(errc::parse_error, "empty p grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw Error(errc::parse_error, "p grid must be ascending");

  const Configuration construction = build_spec(construct_spec);
  PotentialFlags proto = pf;
  proto.p = grid.front();
  const Potential family = proto.build(d);
  const OptimizerOptions opts = of.build();
  const SweepResult sweep = sweep_p(d, n, family, grid, construction, opts);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw Error(errc::parse_error, "cannot write '" + csv_path + "'");
    out << "p,best_energy,construction_energy,bound,gap,restarts_hitting_best\n";
    for (const SweepRow& row : sweep.rows)
      out << format_g17(row.p) << ',' << format_g17(row.best_energy) << ','
          << format_g17(row.construction_energy) << ',' << format_g17(row.bound) << ','
          << format_g17(row.gap) << ',' << row.restarts_hitting_best << "\n";
    out.close();
    std::map<std::string, std::string> params{{"d", std::to_string(d)},
                                              {"n", std::to_string(n)},
                                              {"construction", construct_spec}};
    pf.describe(params);
    of.describe(params);
    write_manifest(csv_path, "sweep", params, opts.seed, {csv_path});
  }

  json rows = json::array();
  for (const SweepRow& row : sweep.rows)
    rows.push_back(json{{"p", row.p},
                        {"best_energy", row.best_energy},
                        {"construction_energy", row.construction_energy},
                        {"bound", row.bound},
                        {"gap", row.gap},
                        {"restarts_hitting_best", row.restarts_hitting_best}});
  json j;
  j["schema"] = 1;
  j["command"] = "sweep";
  j["d"] = d;
  j["n"] = n;
  j["construction"] = construct_spec;
  j["seed"] = opts.seed;
  j["rows"] = rows;
  if (sweep.threshold_estimate)
    j["threshold_estimate"] = *sweep.threshold_estimate;
  else
    j["threshold_estimate"] = nullptr;
  if (!csv_path.empty()) j["csv"] = csv_path;
  emit(j);
  return 0;
}

int cmd_pd_check(std::size_t d, const std::string& coeff_text) {
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos <= coeff_text.size()) {
    const std::size_t comma = coeff_text.find(',', pos);
    coeffs.push_back(Rational::parse(coeff_text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  const PolyRational f{coeffs};
  const std::vector<Rational> expansion = gegenbauer_expand(f, d);

  json terms = json::array();
  bool positive = true;
  for (std::size_t k = 0; k < expansion.size(); ++k) {
    if (expansion[k].is_negative()) positive = false;
    terms.push_back(json{{"degree", k},
                         {"coefficient", expansion[k].to_string()},
                         {"value", expansion[k].to_double()}});
  }
  json j;
  j["schema"] = 1;
  j["command"] = "pd-check";
  j["d"] = d;
  j["input_coefficients"] = [&] {
    json arr = json::array();
    for (const Rational& c : coeffs) arr.push_back(c.to_string());
    return arr;
  }();
  j["expansion"] = terms;
  j["positive_definite"] = positive;
  bool certifiable = true;
  for (std::size_t k = 1; k < expansion.size(); ++k)
    if (expansion[k].is_negative()) certifiable = false;
  if (certifiable && !expansion.empty())
    j["lower_bound"] = expansion[0].to_string();
  else
    j["lower_bound"] = nullptr;
  emit(j);
  return 0;
}

int cmd_anglesum(const std::string& spec) {
  const Configuration x = build_spec(spec);
  json j;
  j["schema"] = 1;
  j["command"] = "anglesum";
  j["d"] = x.dim;
  j["n"] = x.count;
  j["angle_sum"] = angle_sum(x);
  if (x.dim == 2) {
    const double bound = fejes_toth_bound(x.count);
    j["fejes_toth_bound"] = bound;
    j["slack"] = bound - angle_sum(x);
  }
  emit(j);
  return 0;
}

int cmd_compare(std::size_t d, std::size_t n, const PotentialFlags& pf,
                const std::vector<std::string>& candidate_specs) {
  const Potential f = pf.build(d);
  std::vector<std::pair<std::string, Configuration>> candidates;
  for (const std::string& spec : candidate_specs) candidates.emplace_back(spec, build_spec(spec));
  const auto table = compare_constructions(d, n, f, candidates);
  json rows = json::array();
  for (const RankedConstruction& row : table)
    rows.push_back(json{{"name", row.name},
                        {"energy", row.energy},
                        {"coherence", coherence(row.config)}});
  json j;
  j["schema"] = 1;
  j["command"] = "compare";
  j["d"] = d;
  j["n"] = n;
  j["potential"] = potential_json(f);
  j["table"] = rows;
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-frame energies, bounds, and minimizers for unit-vector configurations"};
  app.require_subcommand(1);

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "evaluate a discrete energy with bounds");
  std::string energy_construct, energy_file;
  PotentialFlags energy_pf;
  energy_cmd->add_option("--construct", energy_construct, "constructor spec (onb:DxN, ...)");
  energy_cmd->add_option("--file", energy_file, "vector file path");
  energy_pf.attach(energy_cmd);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "print all applicable lower bounds");
  std::size_t certify_n = 0, certify_d = 0;
  double certify_p = 1.0;
  certify_cmd->add_option("--N", certify_n, "vector count")->required();
  certify_cmd->add_option("--d", certify_d, "ambient dimension")->required();
  certify_cmd->add_option("--p", certify_p, "exponent")->required();

  // gale
  auto* gale_cmd = app.add_subcommand("gale", "extract and verify the dual tight frame");
  std::string gale_construct, gale_file, gale_out_y, gale_out_w;
  double gale_tol = 1e-8;
  std::uint64_t gale_seed = 0;
  gale_cmd->add_option("--construct", gale_construct, "constructor spec");
  gale_cmd->add_option("--file", gale_file, "vector file path");
  gale_cmd->add_option("--tol", gale_tol, "verification tolerance");
  gale_cmd->add_option("--out-y", gale_out_y, "write dual vectors (vector file)");
  gale_cmd->add_option("--out-weights", gale_out_w, "write weights t_i (vector file)");
  gale_cmd->add_option("--seed", gale_seed, "recorded in the manifest");

  // mstar
  auto* mstar_cmd = app.add_subcommand("mstar", "solve the auxiliary weight problem");
  double mstar_c = 1.0, mstar_p = 1.0;
  std::size_t mstar_n = 0;
  mstar_cmd->add_option("--c", mstar_c, "cap c > 1/N")->required();
  mstar_cmd->add_option("--p", mstar_p, "exponent")->required();
  mstar_cmd->add_option("--N", mstar_n, "weight count")->required();

  // minimize
  auto* minimize_cmd = app.add_subcommand("minimize", "multi-start projected gradient descent");
  std::size_t min_d = 0, min_n = 0;
  std::string min_out;
  PotentialFlags min_pf;
  OptimizerFlags min_of;
  minimize_cmd->add_option("--d", min_d, "ambient dimension")->required();
  minimize_cmd->add_option("--N", min_n, "vector count")->required();
  minimize_cmd->add_option("--out", min_out, "write the best configuration (vector file)");
  min_pf.attach(minimize_cmd);
  min_of.attach(minimize_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "minimize across an exponent grid");
  std::size_t sweep_d = 0, sweep_n = 0;
  double sweep_pmin = 1.0, sweep_pmax = 1.0, sweep_pstep = 0.1;
  std::string sweep_grid, sweep_construct, sweep_csv;
  PotentialFlags sweep_pf;
  OptimizerFlags sweep_of;
  sweep_cmd->add_option("--d", sweep_d, "ambient dimension")->required();
  sweep_cmd->add_option("--N", sweep_n, "vector count")->required();
  sweep_cmd->add_option("--p-min", sweep_pmin, "grid start");
  sweep_cmd->add_option("--p-max", sweep_pmax, "grid end");
  sweep_cmd->add_option("--p-step", sweep_pstep, "grid step");
  sweep_cmd->add_option("--p-grid", sweep_grid, "comma-separated exponents (overrides min/max)");
  sweep_cmd->add_option("--construct", sweep_construct, "reference construction spec")->required();
  sweep_cmd->add_option("--csv", sweep_csv, "write rows as CSV");
  sweep_pf.attach(sweep_cmd, /*require_p=*/false);  // the grid supplies p
  sweep_of.attach(sweep_cmd);

  // pd-check
  auto* pd_cmd = app.add_subcommand("pd-check", "exact orthogonal-expansion certificate");
  std::size_t pd_d = 0;
  std::string pd_coeffs;
  pd_cmd->add_option("--d", pd_d, "sphere dimension (>= 2)")->required();
  pd_cmd->add_option("--coeffs", pd_coeffs, "polynomial coefficients c0,c1,... (rationals)")
      ->required();

  // anglesum
  auto* angle_cmd = app.add_subcommand("anglesum", "sum of pairwise line angles");
  std::string angle_construct, angle_file;
  angle_cmd->add_option("--construct", angle_construct, "constructor spec");
  angle_cmd->add_option("--file", angle_file, "vector file path");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "rank candidate constructions by energy");
  std::size_t cmp_d = 0, cmp_n = 0;
  std::vector<std::string> cmp_candidates;
  PotentialFlags cmp_pf;
  compare_cmd->add_option("--d", cmp_d, "ambient dimension")->required();
  compare_cmd->add_option("--N", cmp_n, "vector count")->required();
  compare_cmd->add_option("--candidate", cmp_candidates, "constructor spec (repeatable)");
  cmp_pf.attach(compare_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto pick_input = [](const std::string& construct, const std::string& file) {
      if (!construct.empty() && file.empty()) return construct;
      if (construct.empty() && !file.empty()) return "file:" + file;
      throw Error(errc::parse_error, "need exactly one of --construct / --file");
    };
    if (energy_cmd->parsed()) return cmd_energy(pick_input(energy_construct, energy_file), energy_pf);
    if (certify_cmd->parsed()) return cmd_certify(certify_n, certify_d, certify_p);
    if (gale_cmd->parsed())
      return cmd_gale(pick_input(gale_construct, gale_file), gale_tol, gale_out_y, gale_out_w,
                      gale_seed);
    if (mstar_cmd->parsed()) return cmd_mstar(mstar_c, mstar_p, mstar_n);
    if (minimize_cmd->parsed()) return cmd_minimize(min_d, min_n, min_pf, min_of, min_out);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_d, sweep_n, sweep_pf, sweep_of, sweep_pmin, sweep_pmax, sweep_pstep,
                       sweep_grid, sweep_construct, sweep_csv);
    if (pd_cmd->parsed()) return cmd_pd_check(pd_d, pd_coeffs);
    if (angle_cmd->parsed()) return cmd_anglesum(pick_input(angle_construct, angle_file));
    if (compare_cmd->parsed()) return cmd_compare(cmp_d, cmp_n, cmp_pf, cmp_candidates);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  }
  return 2;
}
