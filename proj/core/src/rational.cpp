#include "pframe/rational.hpp"

#include "pframe/errors.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pframe {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > i128(0x7fffffffffffffffLL) || v < -i128(0x7fffffffffffffffLL) - 1)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

struct Reduced {
  long long num;
  long long den;
};

Reduced reduce(i128 num, i128 den) {
  if (den == 0) throw Error(errc::domain_error, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = num == 0 ? den : gcd128(num, den);
  return Reduced{narrow(num / g), narrow(den / g)};
}

Rational make(i128 num, i128 den) {
  const Reduced r = reduce(num, den);
  return Rational(r.num, r.den);
}

}  // namespace

Rational::Rational(long long num, long long den) {
  const Reduced r = reduce(num, den);
  num_ = r.num;
  den_ = r.den;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& rhs) const {
  return make(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
  return make(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
  return make(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) throw Error(errc::domain_error, "rational division by zero");
  return make(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
  return i128(num_) * rhs.den_ < i128(rhs.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  try {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(v);
    }
    std::size_t used_n = 0, used_d = 0;
    const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    const long long num = std::stoll(ns, &used_n);
    const long long den = std::stoll(ds, &used_d);
    if (used_n != ns.size() || used_d != ds.size()) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad rational '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace pframe
