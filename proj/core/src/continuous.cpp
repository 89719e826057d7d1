#include "pframe/continuous.hpp"

#include "pframe/errors.hpp"

#include <cmath>
#include <string>

namespace pframe {

void PolyRational::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

PolyRational PolyRational::operator+(const PolyRational& rhs) const {
  std::vector<Rational> out(std::max(coeffs.size(), rhs.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return PolyRational(std::move(out));
}

PolyRational PolyRational::operator-(const PolyRational& rhs) const {
  std::vector<Rational> out(std::max(coeffs.size(), rhs.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
  return PolyRational(std::move(out));
}

PolyRational PolyRational::operator*(const PolyRational& rhs) const {
  if (coeffs.empty() || rhs.coeffs.empty()) return PolyRational();
  std::vector<Rational> out(coeffs.size() + rhs.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs.size(); ++j) out[i + j] += coeffs[i] * rhs.coeffs[j];
  return PolyRational(std::move(out));
}

PolyRational PolyRational::scaled(const Rational& s) const {
  std::vector<Rational> out = coeffs;
  for (Rational& c : out) c *= s;
  return PolyRational(std::move(out));
}

Rational sphere_moment(std::size_t e, std::size_t d) {
  if (d < 2) throw Error(errc::invariant_violation, "d must be >= 2");
  if (e % 2 == 1) return Rational(0);
  if (e == 0) return Rational(1);
  const std::size_t j = e / 2;
  long long num = 1;
  for (std::size_t i = 1; i <= j; ++i) num *= static_cast<long long>(2 * i - 1);  // (e-1)!!
  long long den = 1;
  for (std::size_t i = 0; i < j; ++i) den *= static_cast<long long>(d + 2 * i);
  return Rational(num, den);
}

namespace {

Rational poly_inner(const PolyRational& f, const PolyRational& g, std::size_t d) {
  Rational acc(0);
  for (std::size_t a = 0; a < f.coeffs.size(); ++a) {
    if (f.coeffs[a].is_zero()) continue;
    for (std::size_t b = 0; b < g.coeffs.size(); ++b) {
      if (g.coeffs[b].is_zero()) continue;
      acc += f.coeffs[a] * g.coeffs[b] * sphere_moment(a + b, d);
    }
  }
  return acc;
}

PolyRational monomial(std::size_t k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = Rational(1);
  return PolyRational(std::move(c));
}

}  // namespace

PolyRational gegenbauer_monic(std::size_t k, std::size_t d) {
  if (k > 6) throw Error(errc::unsupported_degree, "degrees above 6 are not supported");
  if (d < 2) throw Error(errc::invariant_violation, "d must be >= 2");
  std::vector<PolyRational> basis;
  basis.reserve(k + 1);
  for (std::size_t m = 0; m <= k; ++m) {
    PolyRational g = monomial(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Rational proj = poly_inner(monomial(m), basis[j], d) / poly_inner(basis[j], basis[j], d);
      g = g - basis[j].scaled(proj);
    }
    basis.push_back(std::move(g));
  }
  return basis[k];
}

std::vector<Rational> gegenbauer_expand(const PolyRational& f, std::size_t d) {
  if (f.coeffs.size() > 7) throw Error(errc::unsupported_degree, "degrees above 6 are not supported");
  const std::size_t deg = f.coeffs.empty() ? 0 : f.degree();
  std::vector<Rational> out(deg + 1, Rational(0));
  PolyRational rem = f;
  for (std::size_t k = deg + 1; k-- > 0;) {
    const Rational ck = rem.coeff(k);  // orthogonal basis is monic
    out[k] = ck;
    if (!ck.is_zero()) rem = rem - gegenbauer_monic(k, d).scaled(ck);
  }
  if (!rem.coeffs.empty())
    throw Error(errc::numerical_failure, "nonzero remainder in exact expansion");
  return out;
}

bool is_positive_definite(const PolyRational& f, std::size_t d) {
  for (const Rational& c : gegenbauer_expand(f, d))
    if (c.is_negative()) return false;
  return true;
}

Rational gegenbauer_lower_bound(const PolyRational& f, std::size_t d) {
  const std::vector<Rational> coeffs = gegenbauer_expand(f, d);
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k].is_negative())
      throw Error(errc::not_certifiable,
                  "negative coefficient on degree " + std::to_string(k));
  return coeffs.empty() ? Rational(0) : coeffs[0];
}

double continuous_energy(const Configuration& x, const Potential& f) {
  validate_unit_norms(x);
  const std::size_t n = x.count;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += eval_potential(f, 1.0);  // diagonal term, included by definition
    for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * eval_potential(f, inner(x, i, j));
  }
  return sum / (static_cast<double>(n) * static_cast<double>(n));
}

bool check_scaled_potential_inequality(std::span<const double> t_grid, std::size_t d, double p) {
  if (!(p > 0.0 && p <= 2.0)) throw Error(errc::bad_exponent, "needs p in (0, 2]");
  if (d < 2) throw Error(errc::invariant_violation, "d must be >= 2");
  const double dd = static_cast<double>(d);
  const double simplex_scale = 1.0 + 1.0 / dd;
  const double etf_alpha_sq = 1.0 / (dd + 2.0);
  const double etf_scale = 1.0 - etf_alpha_sq;
  for (double t : t_grid) {
    const double tc = std::min(1.0, std::max(-1.0, t));
    const double u1 = std::fabs((tc + 1.0 / dd) / simplex_scale);
    const double u2 = std::fabs((tc * tc - etf_alpha_sq) / etf_scale);
    if (std::pow(u1, p) < u1 * u1 - 1e-12) return false;
    if (std::pow(u2, p) < u2 * u2 - 1e-12) return false;
  }
  return true;
}

}  // namespace pframe
