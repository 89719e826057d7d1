#include "doctest.h"

#include "pframe/bounds.hpp"
#include "pframe/configs.hpp"
#include "pframe/energies.hpp"
#include "pframe/errors.hpp"
#include "pframe/gale.hpp"

#include "helpers.hpp"

#include <cmath>
#include <vector>

using namespace pframe;
using testutil::near;

namespace {

// Independent re-derivation of the tangent-line constant: the best slope
// s with weight_cost(c,p,t) >= s*t on (0,c), found by grid minimization of
// weight_cost/t. Since the weights sum to 1, s itself is the energy bound.
double min_cost_slope(double c, double p) {
  double best = 1e300;
  const int grid = 200000;
  for (int j = 1; j < grid; ++j) {
    const double t = c * static_cast<double>(j) / grid;
    best = std::min(best, weight_cost(c, p, t) / t);
  }
  return best;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("weight cost basics") {
  CHECK(weight_cost(1.0, 1.5, 0.0) == 0.0);
  CHECK(std::isinf(weight_cost(1.0, 1.5, 1.0)));
  CHECK(near(weight_cost(1.0, 2.0, 0.5), 1.0, 1e-15));
  CHECK(near(weight_cost(0.5, 1.0, 0.25), 1.0, 1e-15));
}

TEST_CASE("mstar at the first threshold exponent") {
  const double p1 = p_threshold(1);
  for (std::size_t n : {3, 4, 6}) {
    const MStarSolution sol = mstar(1.0, p1, n);
    CHECK(near(sol.value, 2.0, 1e-12));
    CHECK(sol.family == MStarFamily::equal_split);
    CHECK((sol.k == 2 || sol.k == 3));
  }
}

TEST_CASE("mstar equal split example") {
  const MStarSolution sol = mstar(0.5, 1.0, 5);
  CHECK(near(sol.value, 4.0, 1e-12));
  CHECK(sol.family == MStarFamily::equal_split);
  CHECK(sol.k == 4);
}

TEST_CASE("mstar closed form at p = 2") {
  // Convex cost: the split over all N weights wins, value N/(Nc-1).
  for (double c : {1.0, 0.5, 1.0 / 3.0}) {
    for (std::size_t n = 2; n <= 6; ++n) {
      if (!(c * static_cast<double>(n) > 1.0)) continue;
      const MStarSolution sol = mstar(c, 2.0, n);
      const double expected = static_cast<double>(n) / (static_cast<double>(n) * c - 1.0);
      CHECK(near(sol.value, expected, 1e-10));
      CHECK(sol.family == MStarFamily::equal_split);
      CHECK(sol.k == n);
    }
  }
}

TEST_CASE("mstar solution invariants") {
  for (double c : {1.0, 0.5, 1.0 / 3.0}) {
    for (double p : {1.0, 1.17, 1.5, 2.0}) {
      for (std::size_t n = 2; n <= 6; ++n) {
        if (!(c * static_cast<double>(n) > 1.0)) continue;
        const MStarSolution sol = mstar(c, p, n);
        double sum = 0.0, recomputed = 0.0;
        for (double t : sol.weights) {
          CHECK(t >= 0.0);
          CHECK(t < c);
          sum += t;
          recomputed += weight_cost(c, p, t);
        }
        CHECK(near(sum, 1.0, 1e-12));
        CHECK(near(recomputed, sol.value, 1e-10));
      }
    }
  }
}

TEST_CASE("mstar infeasible c") {
  for (auto [c, n] : {std::pair<double, std::size_t>{0.5, 2}, {1.0 / 3.0, 3}, {0.1, 5}}) {
    CHECK_THROWS_AS(mstar(c, 1.0, n), Error);
    try {
      mstar(c, 1.0, n);
    } catch (const Error& err) {
      CHECK(err.code() == errc::infeasible_c);
    }
  }
}

TEST_CASE("oracle agrees with the structural solver") {
  CHECK(near(mstar_oracle(1.0, 1.5, 4), mstar(1.0, 1.5, 4).value, 1e-6));
  CHECK(near(mstar_oracle(0.5, 2.0, 4), 4.0, 1e-6));
  CHECK(near(mstar_oracle(1.0, 1.0, 2), 2.0, 1e-6));
}

TEST_CASE("oracle grid equivalence") {
  // same grid as the acceptance suite: 48 feasible cases
  std::size_t cases = 0;
  for (double c : {1.0, 0.5, 1.0 / 3.0}) {
    for (double p : {1.0, 1.17, 1.5, 2.0}) {
      for (std::size_t n = 2; n <= 6; ++n) {
        if (!(c * static_cast<double>(n) > 1.0)) continue;
        CHECK(near(mstar(c, p, n).value, mstar_oracle(c, p, n), 1e-6));
        ++cases;
      }
    }
  }
  CHECK(cases == 48);
}

TEST_CASE("oracle refuses large instances") {
  CHECK_THROWS_AS(mstar_oracle(1.0, 1.0, 9), Error);
  try {
    mstar_oracle(1.0, 1.0, 9);
  } catch (const Error& err) {
    CHECK(err.code() == errc::too_large);
  }
}

TEST_CASE("mstar oracle fallback below p = 1") {
  const MStarSolution sol = mstar(1.0, 0.8, 5);
  CHECK(sol.oracle_checked);
  CHECK(near(sol.value, mstar_oracle(1.0, 0.8, 5), 1e-6));
  double sum = 0.0;
  for (double t : sol.weights) sum += t;
  CHECK(near(sum, 1.0, 1e-9));
}

TEST_CASE("mstar energy bound hits the sharp excess values") {
  // N = d + m at the matching threshold exponent: the bound equals 2m.
  for (auto [m, d] : {std::pair<std::size_t, std::size_t>{1, 2}, {1, 3}, {2, 3}, {3, 4}}) {
    const double pm = p_threshold(m);
    CHECK(near(mstar_energy_bound(d + m, d, pm), 2.0 * static_cast<double>(m), 1e-8));
  }
  // p = 2: matches the closed-form bound for p >= 2
  CHECK(near(mstar_energy_bound(6, 3, 2.0), 6.0, 1e-10));
  CHECK(near(welch_energy_bound(6, 3, 2.0), 6.0, 1e-12));

  CHECK_THROWS_AS(mstar_energy_bound(3, 3, 1.0), Error);
  try {
    mstar_energy_bound(3, 3, 1.0);
  } catch (const Error& err) {
    CHECK(err.code() == errc::not_applicable);
  }
  CHECK_THROWS_AS(mstar_energy_bound(4, 3, 0.5), Error);
}

TEST_CASE("tangent line bound") {
  CHECK(near(tangent_line_bound(7, 4, 1.0), 6.0, 1e-12));
  CHECK(tangent_line_bound(3, 3, 1.0) == 0.0);
  CHECK(tangent_line_bound(2, 3, 1.5) == 0.0);
  CHECK(near(tangent_line_bound(5, 3, 0.7), 4.0, 1e-12));

  // frozen value, re-derived below from the slope minimization
  CHECK(near(tangent_line_bound(5, 3, 1.5), 3.5095307012066466, 1e-12));
  for (double p : {1.0, 1.25, 1.5, 1.75}) {
    const double direct = min_cost_slope(0.5, p);
    CHECK(near(tangent_line_bound(5, 3, p), direct, 1e-7));
  }

  CHECK_THROWS_AS(tangent_line_bound(5, 3, 2.0), Error);
}

TEST_CASE("welch energy bound") {
  CHECK(near(welch_energy_bound(3, 2, 2.0), 1.5, 1e-14));
  CHECK(near(welch_energy_bound(28, 7, 4.0), 756.0 / 81.0, 1e-12));
  CHECK(welch_energy_bound(3, 3, 3.0) == 0.0);
  CHECK_THROWS_AS(welch_energy_bound(6, 3, 1.9), Error);
}

TEST_CASE("welch coherence bound") {
  CHECK(near(welch_bound(3, 2), 0.5, 1e-15));
  CHECK(near(welch_bound(6, 3), 1.0 / std::sqrt(5.0), 1e-15));
  CHECK(welch_bound(3, 3) == 0.0);
}

TEST_CASE("gerzon bound") {
  CHECK(gerzon_bound(3, Field::real) == 6);
  CHECK(gerzon_bound(7, Field::real) == 28);
  CHECK(gerzon_bound(2, Field::complex_field) == 4);
}

TEST_CASE("threshold exponents") {
  CHECK(near(p_threshold(1), 1.16993, 5e-6));
  // identity: p_1 = 2 (ln3/ln2 - 1)
  CHECK(near(p_threshold(1), 2.0 * (std::log(3.0) / std::log(2.0) - 1.0), 1e-12));
  CHECK(near(p_threshold(2), 1.1006794264264169, 1e-12));
  CHECK(near(p_threshold(3), 1.0716738690979492, 1e-12));
}

TEST_CASE("equal split objective ties at 2m and 2m+1") {
  for (std::size_t m : {1, 2, 3}) {
    const double pm = p_threshold(m);
    const double at2m = equal_split_objective(m, 2.0 * m, pm);
    const double at2m1 = equal_split_objective(m, 2.0 * m + 1.0, pm);
    CHECK(near(at2m, 2.0 * static_cast<double>(m), 1e-10));
    CHECK(near(at2m1, 2.0 * static_cast<double>(m), 1e-10));

    // single interior minimum sits between the tied integers
    double lo = m * (1.0 + 1e-9), hi = 8.0 * m + 10.0;
    for (int it = 0; it < 300; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (equal_split_objective(m, m1, pm) < equal_split_objective(m, m2, pm))
        hi = m2;
      else
        lo = m1;
    }
    const double argmin = 0.5 * (lo + hi);
    CHECK(argmin >= 2.0 * m - 1e-6);
    CHECK(argmin <= 2.0 * m + 1.0 + 1e-6);
  }
  CHECK_THROWS_AS(equal_split_objective(2, 2.0, 1.0), Error);
}

TEST_CASE("planar bound") {
  CHECK(planar_energy_bound(4, 1.3) == 4.0);
  CHECK(planar_energy_bound(5, 1.3) == 8.0);
  CHECK(planar_energy_bound(1, 1.0) == 0.0);
  CHECK_THROWS_AS(planar_energy_bound(5, 1.31), Error);
}

TEST_CASE("per-row certificate on closed-form duals") {
  Configuration dup(2, 3);  // {e1, e1, e2}
  dup.vec(0)[0] = 1.0;
  dup.vec(1)[0] = 1.0;
  dup.vec(2)[1] = 1.0;
  const GramMatrix a = gram(dup);
  const GaleDual g = gale_dual(a, 2);
  const std::vector<double> res = per_row_certificate(a, g, 1.0);
  REQUIRE(res.size() == 3);
  CHECK(near(res[0], 0.0, 1e-9));  // equality rows: LHS = RHS = 1
  CHECK(near(res[1], 0.0, 1e-9));
  CHECK(near(res[2], 0.0, 1e-9));  // zero weight row: 0 - 0

  const GramMatrix am = gram(simplex(2));
  const GaleDual gm = gale_dual(am, 2);
  const std::vector<double> rm = per_row_certificate(am, gm, 1.0);
  for (double r : rm) CHECK(near(r, 1.0 - std::sqrt(0.5), 1e-9));
}

TEST_CASE("per-row certificate rejects a mismatched dual") {
  const GramMatrix a = gram(simplex(2));
  Configuration other(2, 3);
  other.vec(0)[0] = 1.0;
  other.vec(1)[0] = 1.0;
  other.vec(2)[1] = 1.0;
  const GaleDual g = gale_dual(gram(other), 2);
  CHECK_THROWS_AS(per_row_certificate(a, g, 1.0), Error);
  try {
    per_row_certificate(a, g, 1.0);
  } catch (const Error& err) {
    CHECK(err.code() == errc::mismatched_dual);
  }
}

TEST_CASE("certificate residuals are nonnegative on random configurations") {
  std::mt19937_64 eng = stream_engine(41, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(uniform01(eng) * 5.0);
    const std::size_t n = d + 1 + static_cast<std::size_t>(uniform01(eng) * 10.0);
    const Configuration x = random_configuration(d, n, eng);
    const GramMatrix a = gram(x);
    const GaleDual g = gale_dual(a, d);
    for (double p : {1.0, 1.5, 2.0, 3.0})
      for (double r : per_row_certificate(a, g, p)) CHECK(r >= -1e-8);
  }
}

TEST_CASE("bounds never exceed measured energies") {
  std::mt19937_64 eng = stream_engine(42, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(uniform01(eng) * 4.0);
    const std::size_t n = d + 1 + static_cast<std::size_t>(uniform01(eng) * 8.0);
    const Configuration x = random_configuration(d, n, eng);
    const GramMatrix a = gram(x);
    CHECK(coherence(x) >= welch_bound(n, d) - 1e-10);
    for (double p : {1.0, 1.3, 1.7}) {
      const double e = energy(a, Potential::pframe(p)).value;
      CHECK(e >= tangent_line_bound(n, d, p) - 1e-8);
      CHECK(e >= mstar_energy_bound(n, d, p) - 1e-8);
      // the auxiliary-problem bound dominates its linear relaxation
      CHECK(mstar_energy_bound(n, d, p) >= tangent_line_bound(n, d, p) - 1e-10);
    }
    for (double p : {2.0, 3.0}) {
      const double e = energy(a, Potential::pframe(p)).value;
      CHECK(e >= welch_energy_bound(n, d, p) - 1e-8);
      CHECK(e >= mstar_energy_bound(n, d, p) - 1e-8);
    }
  }
}

TEST_CASE("welch energy equality holds exactly on catalog etfs") {
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 6}, {7, 28}}) {
    const GramMatrix a = gram(etf(d, n));
    for (double p : {2.0, 3.0, 4.0}) {
      const double e = energy(a, Potential::pframe(p)).value;
      CHECK(near(e, welch_energy_bound(n, d, p), 1e-9));
    }
  }
}

}  // TEST_SUITE
