#pragma once

// Dense univariate polynomials over an exact field.

#include "fibsum/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fibsum {

/// Polynomial sum_i coeffs[i] * x^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients. `Field` needs the four field
/// operations, equality, construction from int and an `is_zero()` member.
template <typename Field>
class Poly {
 public:
  using value_type = Field;

  Poly() = default;
  explicit Poly(std::vector<Field> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Field> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Field c) { return Poly(std::vector<Field>{std::move(c)}); }
  /// c * x^e.
  static Poly monomial(Field c, std::size_t e) {
    std::vector<Field> v(e + 1, Field(0));
    v[e] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Field(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Field>& coeffs() const { return c_; }

  /// Coefficient of x^i, zero beyond the degree.
  Field operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Field(0); }
  const Field& leading() const { return c_.back(); }

  template <typename Point>
  Point eval(const Point& x) const {
    Point acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Point(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Field> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Field(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  /// x * p'(x): maps sum a_i x^i to sum i a_i x^i.
  Poly euler_derivative() const {
    std::vector<Field> d(c_.size(), Field(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i] = c_[i] * Field(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// p(x) with x replaced by a*x.
  Poly scale_argument(const Field& a) const {
    std::vector<Field> d(c_);
    Field f(1);
    for (auto& c : d) {
      c = c * f;
      f = f * a;
    }
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<Field> d(c_);
    for (auto& c : d) c = -c;
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Field& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> d(a.c_.size() + b.c_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
  }
  friend Poly operator*(Poly a, const Field& s) { return a *= s; }
  friend Poly operator*(const Field& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns {quotient, remainder}. Throws on zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Field> rem(a.c_);
    const std::size_t db = b.c_.size() - 1;
    if (rem.size() < b.c_.size()) return {Poly{}, a};
    std::vector<Field> quo(rem.size() - db, Field(0));
    const Field& lead = b.c_.back();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i].is_zero()) continue;
      Field q = rem[i] / lead;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.c_[j];
      quo[i - db] = std::move(q);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Leading coefficient scaled to one; zero stays zero.
  Poly monic() const {
    if (is_zero()) return {};
    Poly p(*this);
    const Field lead = leading();
    for (auto& c : p.c_) c = c / lead;
    return p;
  }

  /// Coefficient strings in ascending degree.
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Field> c_;
};

/// Monic gcd by the Euclidean algorithm. gcd(0, 0) is rejected.
template <typename Field>
Poly<Field> gcd(Poly<Field> a, Poly<Field> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

enum class PolyOp { add, sub, mul, gcd };

template <typename Field>
Poly<Field> poly_arith(PolyOp op, const Poly<Field>& p, const Poly<Field>& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::gcd: return gcd(p, q);
  }
  throw std::logic_error("unknown polynomial op");
}

/// (x + c)^p expanded: sum_i C(p,i) c^(p-i) x^i. Uses 0^0 = 1.
template <typename Field>
Poly<Field> shifted_power(const Field& c, unsigned p) {
  std::vector<Field> out(p + 1, Field(0));
  Integer binom = 1;
  for (unsigned i = 0; i <= p; ++i) {
    // C(p, i) c^(p-i)
    Field cp(1);
    for (unsigned e = 0; e < p - i; ++e) cp = cp * c;
    out[i] = Field(binom) * cp;
    binom = binom * (p - i) / (i + 1);
  }
  return Poly<Field>(std::move(out));
}

using QPoly = Poly<GaussianRational>;

}  // namespace fibsum
