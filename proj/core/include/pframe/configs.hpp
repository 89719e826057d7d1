#pragma once

#include "pframe/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pframe {

/// N unit vectors in R^d. Vector i occupies coords[i*dim .. (i+1)*dim).
struct Configuration {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::vector<double> coords;

  Configuration() = default;
  Configuration(std::size_t d, std::size_t n) : dim(d), count(n), coords(d * n, 0.0) {}

  std::span<const double> vec(std::size_t i) const { return {coords.data() + i * dim, dim}; }
  std::span<double> vec(std::size_t i) { return {coords.data() + i * dim, dim}; }
};

/// Throws invariant_violation unless every vector has norm 1 within tol
/// and all coordinates are finite.
void validate_unit_norms(const Configuration& x, double tol = 1e-8);

double inner(const Configuration& x, std::size_t i, std::size_t j);

/// Symmetric N x N matrix of pairwise inner products, unit diagonal.
struct GramMatrix {
  Matrix entries;
  std::size_t size() const { return entries.rows(); }
};

GramMatrix gram(const Configuration& x);

/// e_1, e_2, ..., e_d, e_1, e_2, ... until N vectors are placed.
Configuration repeated_onb(std::size_t d, std::size_t n);

/// d+1 unit vectors in R^d with all pairwise inner products -1/d.
Configuration simplex(std::size_t d);

/// Catalog of equiangular tight frames: (d,d) orthonormal basis,
/// (d,d+1) simplex, and the maximal real ETFs (2,3), (3,6), (7,28).
/// Throws unknown_etf for anything else.
Configuration etf(std::size_t d, std::size_t n);

/// Vector j of the result equals base vector (j mod base.count).
Configuration repeat_config(const Configuration& base, std::size_t n);

/// max over i != j of |<x_i, x_j>|; 0 for N < 2.
double coherence(const Configuration& x);

struct TightFrameCheck {
  bool tight = false;
  double frame_constant = 0.0;  // (sum of squared norms) / d
};

/// True iff the frame operator sum x_i x_i^T equals c * I within tol
/// (max-abs entrywise).
TightFrameCheck is_tight_frame(const Configuration& x, double tol);

/// Tight and equiangular: all |<x_i,x_j>|, i != j, agree within tol.
bool is_etf(const Configuration& x, double tol);

/// Projective normal form: each vector sign-flipped so its first entry of
/// magnitude > 1e-9 is nonnegative, then vectors sorted lexicographically.
/// Leaves every even-in-t energy unchanged.
Configuration canonicalize(const Configuration& x);

}  // namespace pframe
