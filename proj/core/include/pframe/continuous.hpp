#pragma once

#include "pframe/configs.hpp"
#include "pframe/energies.hpp"
#include "pframe/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pframe {

/// Polynomial in t with exact rational coefficients, index = degree.
struct PolyRational {
  std::vector<Rational> coeffs;

  PolyRational() = default;
  explicit PolyRational(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
  void trim();

  PolyRational operator+(const PolyRational& rhs) const;
  PolyRational operator-(const PolyRational& rhs) const;
  PolyRational operator*(const PolyRational& rhs) const;
  PolyRational scaled(const Rational& s) const;
  bool operator==(const PolyRational& rhs) const { return coeffs == rhs.coeffs; }
};

/// Moment of t^e under the projected sphere measure on [-1, 1] (weight
/// (1-t^2)^((d-3)/2) normalized): 0 for odd e, (e-1)!! / (d(d+2)...(d+e-2))
/// for even e.
Rational sphere_moment(std::size_t e, std::size_t d);

/// Monic polynomial of degree k orthogonal to all lower degrees under the
/// sphere measure, by Gram-Schmidt on monomials with exact moments.
/// Degrees 0..6 only (unsupported_degree beyond), d >= 2.
PolyRational gegenbauer_monic(std::size_t k, std::size_t d);

/// Exact coefficients of f over the monic orthogonal basis G_0..G_deg(f).
std::vector<Rational> gegenbauer_expand(const PolyRational& f, std::size_t d);

/// Sufficient positive-definiteness certificate: true iff every expansion
/// coefficient is >= 0.
bool is_positive_definite(const PolyRational& f, std::size_t d);

/// G_0 coefficient of the expansion, valid as a lower bound for the
/// continuous energy of any probability measure once every nonconstant
/// coefficient is nonnegative. Throws not_certifiable otherwise.
Rational gegenbauer_lower_bound(const PolyRational& f, std::size_t d);

/// Continuous energy of the uniform measure on X: the average of the
/// potential over ALL ordered pairs including i = j, divided by N^2.
double continuous_energy(const Configuration& x, const Potential& f);

/// Checks |u|^p >= |u|^2 (within 1e-12 slack) at every grid point for the
/// two normalized potentials u = (t + 1/d)/(1 + 1/d) and
/// u = (t^2 - 1/(d+2))/(1 - 1/(d+2)). Holds for all p in (0, 2].
bool check_scaled_potential_inequality(std::span<const double> t_grid, std::size_t d, double p);

}  // namespace pframe
