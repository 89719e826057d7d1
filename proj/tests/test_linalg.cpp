#include "doctest.h"

#include "pframe/errors.hpp"
#include "pframe/linalg.hpp"

#include "helpers.hpp"

#include <cmath>

using namespace pframe;
using testutil::near;

TEST_SUITE("linalg") {

TEST_CASE("identity eigenvalues") {
  const EigenResult e = sym_eigen(Matrix::identity(3));
  REQUIRE(e.eigenvalues.size() == 3);
  for (double lam : e.eigenvalues) CHECK(near(lam, 1.0, 1e-14));
}

TEST_CASE("diagonal matrix") {
  Matrix s(2, 2, 0.0);
  s(0, 0) = 2.0;
  s(1, 1) = -1.0;
  const EigenResult e = sym_eigen(s);
  CHECK(near(e.eigenvalues[0], 2.0, 1e-14));
  CHECK(near(e.eigenvalues[1], -1.0, 1e-14));
  CHECK(near(e.eigenvectors(0, 0), 1.0, 1e-14));
  CHECK(near(e.eigenvectors(1, 1), 1.0, 1e-14));
}

TEST_CASE("planar 120-degree gram spectrum") {
  // Tight frame of 3 unit vectors in the plane: trace 3, rank 2, equal
  // nonzero eigenvalues, so the spectrum must be (1.5, 1.5, 0).
  Matrix s(3, 3, -0.5);
  for (std::size_t i = 0; i < 3; ++i) s(i, i) = 1.0;
  const EigenResult e = sym_eigen(s);
  CHECK(near(e.eigenvalues[0], 1.5, 1e-12));
  CHECK(near(e.eigenvalues[1], 1.5, 1e-12));
  CHECK(near(e.eigenvalues[2], 0.0, 1e-12));
}

TEST_CASE("asymmetry rejected") {
  Matrix s(2, 2, 0.0);
  s(0, 1) = 1.0;
  s(1, 0) = 0.5;
  CHECK_THROWS_AS(sym_eigen(s), Error);
  try {
    sym_eigen(s);
  } catch (const Error& err) {
    CHECK(err.code() == errc::not_symmetric);
  }
}

TEST_CASE("reconstruction on random symmetric matrices") {
  std::mt19937_64 eng = stream_engine(11, 0);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(eng) * 19.0);
    const Matrix s = testutil::random_symmetric(n, eng, 3.0);
    const EigenResult e = sym_eigen(s);

    Matrix recon(n, n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          recon(i, j) += e.eigenvalues[k] * e.eigenvectors(i, k) * e.eigenvectors(j, k);
    CHECK((recon - s).max_abs() <= 1e-10 * std::max(1.0, s.max_abs()));

    // eigenvalues descending, eigenvectors orthonormal
    for (std::size_t k = 1; k < n; ++k) CHECK(e.eigenvalues[k - 1] >= e.eigenvalues[k]);
    const Matrix vtv = e.eigenvectors.transposed() * e.eigenvectors;
    CHECK((vtv - Matrix::identity(n)).max_abs() <= 1e-12);
  }
}

TEST_CASE("kernel of duplicated-vector gram") {
  Matrix a(3, 3, 0.0);
  a(0, 0) = a(1, 1) = a(2, 2) = 1.0;
  a(0, 1) = a(1, 0) = 1.0;  // gram of {e1, e1, e2}
  const Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(near(k(0, 0), r, 1e-12));
  CHECK(near(k(1, 0), -r, 1e-12));
  CHECK(near(k(2, 0), 0.0, 1e-12));
}

TEST_CASE("full-rank matrix has empty kernel") {
  CHECK_THROWS_AS(kernel_basis(Matrix::identity(4)), Error);
  try {
    kernel_basis(Matrix::identity(4));
  } catch (const Error& err) {
    CHECK(err.code() == errc::empty_kernel);
  }
}

TEST_CASE("kernel of planar 120-degree gram") {
  Matrix a(3, 3, -0.5);
  for (std::size_t i = 0; i < 3; ++i) a(i, i) = 1.0;
  const Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  const double r = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(near(std::fabs(k(i, 0)), r, 1e-12));
  CHECK(k(0, 0) > 0.0);  // sign convention
}

TEST_CASE("kernel columns are orthonormal and annihilated") {
  std::mt19937_64 eng = stream_engine(12, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(uniform01(eng) * 4.0);
    const std::size_t n = d + 1 + static_cast<std::size_t>(uniform01(eng) * 8.0);
    const Configuration x = random_configuration(d, n, eng);
    const Matrix a = gram(x).entries;
    const Matrix k = kernel_basis(a);
    CHECK(k.cols() == n - d);
    const Matrix ktk = k.transposed() * k;
    CHECK((ktk - Matrix::identity(k.cols())).max_abs() <= 1e-12);
    CHECK((a * k).max_abs() <= kDefaultRankTol * std::max(1.0, a.max_abs()));
  }
}

TEST_CASE("inverse square root basics") {
  CHECK((inv_sqrt_psd(Matrix::identity(3)) - Matrix::identity(3)).max_abs() <= 1e-14);

  Matrix diag(2, 2, 0.0);
  diag(0, 0) = 4.0;
  diag(1, 1) = 9.0;
  const Matrix r = inv_sqrt_psd(diag);
  CHECK(near(r(0, 0), 0.5, 1e-14));
  CHECK(near(r(1, 1), 1.0 / 3.0, 1e-14));

  Matrix s(2, 2, 1.0);
  s(0, 0) = s(1, 1) = 2.0;
  const Matrix rs = inv_sqrt_psd(s);
  CHECK(((rs * s) * rs - Matrix::identity(2)).max_abs() <= 1e-12);
}

TEST_CASE("inverse square root rejects semidefinite input") {
  Matrix s(2, 2, 0.0);
  s(0, 0) = 1.0;
  CHECK_THROWS_AS(inv_sqrt_psd(s), Error);
}

TEST_CASE("inverse square root on random spd matrices") {
  std::mt19937_64 eng = stream_engine(13, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(eng) * 10.0);
    const Matrix s = testutil::random_spd(n, eng);
    const Matrix r = inv_sqrt_psd(s);
    CHECK(((r * r) * s - Matrix::identity(n)).max_abs() <= 1e-10 * std::max(1.0, s.max_abs()));
    CHECK((r - r.transposed()).max_abs() <= 1e-12);
  }
}

}  // TEST_SUITE
