#include "doctest.h"

#include "pframe/configs.hpp"
#include "pframe/bounds.hpp"
#include "pframe/continuous.hpp"
#include "pframe/errors.hpp"
#include "pframe/rational.hpp"

#include "helpers.hpp"

#include <vector>

using namespace pframe;
using testutil::near;

namespace {

PolyRational poly(std::initializer_list<Rational> ascending) {
  return PolyRational(std::vector<Rational>(ascending));
}

}  // namespace

TEST_SUITE("continuous") {

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3).is_negative());
  CHECK(Rational(5, 1).to_string() == "5");
  CHECK(Rational(-2, 6).to_string() == "-1/3");
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("sphere moments") {
  CHECK(sphere_moment(0, 5) == Rational(1));
  CHECK(sphere_moment(3, 5) == Rational(0));
  for (std::size_t d = 2; d <= 10; ++d)
    CHECK(sphere_moment(2, d) == Rational(1, static_cast<long long>(d)));
  CHECK(sphere_moment(4, 3) == Rational(1, 5));  // 3/(3*5)
  // circle case agrees with the closed form: 1/2, 3/8, 5/16
  CHECK(sphere_moment(2, 2) == Rational(1, 2));
  CHECK(sphere_moment(4, 2) == Rational(3, 8));
  CHECK(sphere_moment(6, 2) == Rational(5, 16));
}

TEST_CASE("monic orthogonal polynomials") {
  for (std::size_t d = 2; d <= 10; ++d) {
    const long long dd = static_cast<long long>(d);
    CHECK(gegenbauer_monic(1, d) == poly({0, 1}));
    CHECK(gegenbauer_monic(2, d) == poly({Rational(-1, dd), 0, 1}));
    CHECK(gegenbauer_monic(4, d) ==
          poly({Rational(3, (dd + 2) * (dd + 4)), 0, Rational(-6, dd + 4), 0, 1}));
  }
  CHECK_THROWS_AS(gegenbauer_monic(7, 3), Error);
}

TEST_CASE("orthogonality of the basis") {
  for (std::size_t d : {2, 3, 7}) {
    for (std::size_t a = 0; a <= 5; ++a) {
      for (std::size_t b = a + 1; b <= 5; ++b) {
        const PolyRational ga = gegenbauer_monic(a, d), gb = gegenbauer_monic(b, d);
        Rational ip(0);
        for (std::size_t i = 0; i < ga.coeffs.size(); ++i)
          for (std::size_t j = 0; j < gb.coeffs.size(); ++j)
            ip += ga.coeffs[i] * gb.coeffs[j] * sphere_moment(i + j, d);
        CHECK(ip == Rational(0));
      }
    }
  }
}

TEST_CASE("exact expansions of the two squared potentials") {
  for (std::size_t d = 2; d <= 10; ++d) {
    const long long dd = static_cast<long long>(d);

    // (t + 1/d)^2 = G2 + (2/d) G1 + (d+1)/d^2
    const PolyRational shifted =
        poly({Rational(1, dd), 1}) * poly({Rational(1, dd), 1});
    const std::vector<Rational> cs = gegenbauer_expand(shifted, d);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == Rational(dd + 1, dd * dd));
    CHECK(cs[1] == Rational(2, dd));
    CHECK(cs[2] == Rational(1));

    // (t^2 - 1/(d+2))^2 = G4 + 4(d+1)/((d+2)(d+4)) G2 + 2(d+1)/(d(d+2)^2)
    const PolyRational etfpot =
        poly({Rational(-1, dd + 2), 0, 1}) * poly({Rational(-1, dd + 2), 0, 1});
    const std::vector<Rational> ce = gegenbauer_expand(etfpot, d);
    REQUIRE(ce.size() == 5);
    CHECK(ce[0] == Rational(2 * (dd + 1), dd * (dd + 2) * (dd + 2)));
    CHECK(ce[1] == Rational(0));
    CHECK(ce[2] == Rational(4 * (dd + 1), (dd + 2) * (dd + 4)));
    CHECK(ce[3] == Rational(0));
    CHECK(ce[4] == Rational(1));
  }
}

TEST_CASE("expansion re-sums to the input exactly") {
  std::mt19937_64 eng = stream_engine(61, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> cs;
    const std::size_t deg = static_cast<std::size_t>(uniform01(eng) * 6.0);
    for (std::size_t k = 0; k <= deg; ++k)
      cs.push_back(Rational(static_cast<long long>(uniform01(eng) * 21.0) - 10,
                            1 + static_cast<long long>(uniform01(eng) * 6.0)));
    const PolyRational f{cs};
    const std::size_t d = 2 + static_cast<std::size_t>(uniform01(eng) * 8.0);
    const std::vector<Rational> expansion = gegenbauer_expand(f, d);
    PolyRational sum;
    for (std::size_t k = 0; k < expansion.size(); ++k)
      sum = sum + gegenbauer_monic(k, d).scaled(expansion[k]);
    CHECK(sum == f);
  }
}

TEST_CASE("positive definiteness certificates") {
  for (std::size_t d : {2, 3, 5}) {
    const long long dd = static_cast<long long>(d);
    CHECK(is_positive_definite(poly({Rational(-1, dd), 0, 1}), d));  // t^2 - 1/d
    const PolyRational shifted =
        poly({Rational(1, dd), 1}) * poly({Rational(1, dd), 1});
    CHECK(is_positive_definite(shifted, d));
    CHECK(is_positive_definite(
        shifted - poly({Rational(dd + 1, dd * dd)}), d));
    CHECK_FALSE(is_positive_definite(poly({0, -1}), d));  // -t
  }
}

TEST_CASE("certified lower bounds") {
  CHECK(gegenbauer_lower_bound(poly({Rational(1, 4), 1}) * poly({Rational(1, 4), 1}), 4) ==
        Rational(5, 16));
  CHECK(gegenbauer_lower_bound(poly({Rational(-1, 9), 0, 1}) * poly({Rational(-1, 9), 0, 1}), 7) ==
        Rational(16, 567));
  for (std::size_t d : {2, 3, 6})
    CHECK(gegenbauer_lower_bound(poly({0, 0, 1}), d) == Rational(1, static_cast<long long>(d)));

  CHECK_THROWS_AS(gegenbauer_lower_bound(poly({1, -1}), 3), Error);
  try {
    gegenbauer_lower_bound(poly({1, -1}), 3);
  } catch (const Error& err) {
    CHECK(err.code() == errc::not_certifiable);
  }
}

TEST_CASE("continuous energies of the extremal configurations") {
  for (std::size_t d = 2; d <= 10; ++d) {
    const double dd = static_cast<double>(d);
    const double value = continuous_energy(simplex(d), Potential::simplex_shift(d, 2.0));
    CHECK(near(value, (dd + 1.0) / (dd * dd), 1e-12));
  }
  for (std::size_t d : {2, 3, 7}) {
    const double dd = static_cast<double>(d);
    const std::size_t n = gerzon_bound(d, Field::real);
    const double value =
        continuous_energy(etf(d, n), Potential::etf_dev(1.0 / (dd + 2.0), 2.0));
    CHECK(near(value, 2.0 * (dd + 1.0) / (dd * (dd + 2.0) * (dd + 2.0)), 1e-12));
  }
  // spot values: d=2 -> 3/16, d=3 -> 8/75
  CHECK(near(continuous_energy(etf(2, 3), Potential::etf_dev(0.25, 2.0)), 3.0 / 16.0, 1e-12));
  CHECK(near(continuous_energy(etf(3, 6), Potential::etf_dev(0.2, 2.0)), 8.0 / 75.0, 1e-12));
}

TEST_CASE("random configurations respect the certified bound") {
  std::mt19937_64 eng = stream_engine(62, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(uniform01(eng) * 2.0);
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(eng) * 8.0);
    const Configuration x = random_configuration(d, n, eng);
    const double dd = static_cast<double>(d);
    const double value = continuous_energy(x, Potential::simplex_shift(d, 2.0));
    CHECK(value >= (dd + 1.0) / (dd * dd) - 1e-10);
  }
}

TEST_CASE("scaled potential inequality on grids") {
  std::vector<double> grid;
  for (int j = 0; j <= 10000; ++j) grid.push_back(-1.0 + 2.0 * j / 10000.0);
  CHECK(check_scaled_potential_inequality(grid, 3, 1.0));
  CHECK(check_scaled_potential_inequality(grid, 2, 2.0));
  const std::vector<double> ends = {-1.0, 1.0};
  for (std::size_t d : {2, 3, 7})
    for (double p : {0.3, 1.0, 1.7, 2.0}) CHECK(check_scaled_potential_inequality(ends, d, p));
  CHECK_THROWS_AS(check_scaled_potential_inequality(ends, 3, 2.5), Error);
}

}  // TEST_SUITE
