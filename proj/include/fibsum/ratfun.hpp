#pragma once

// Reduced rational functions in one variable w over Q(i), and the Euler
// operator D = w d/dw.

#include "fibsum/exact.hpp"
#include "fibsum/poly.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibsum {

struct PoleAtPoint : std::domain_error {
  PoleAtPoint() : std::domain_error("pole at evaluation point") {}
};

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RatFun {
 public:
  RatFun() : den_(QPoly::constant(GaussianRational(1))) {}
  RatFun(int c) : RatFun(QPoly::constant(GaussianRational(c))) {}  // NOLINT
  RatFun(long c) : RatFun(QPoly::constant(GaussianRational(c))) {}  // NOLINT
  RatFun(const Integer& c) : RatFun(QPoly::constant(GaussianRational(c))) {}  // NOLINT
  RatFun(const Rational& c) : RatFun(QPoly::constant(GaussianRational(c))) {}  // NOLINT
  RatFun(const GaussianRational& c) : RatFun(QPoly::constant(c)) {}  // NOLINT
  RatFun(QPoly num) : num_(std::move(num)), den_(QPoly::constant(GaussianRational(1))) {}  // NOLINT

  /// Reduces num/den to canonical form. Throws ZeroDenominator for den == 0.
  RatFun(QPoly num, QPoly den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) {
      den_ = QPoly::constant(GaussianRational(1));
      return;
    }
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
    const GaussianRational lead = den.leading();
    if (!lead.is_one()) {
      const GaussianRational inv = GaussianRational(1) / lead;
      num *= inv;
      den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
  }

  /// The indeterminate w.
  static RatFun w() { return RatFun(QPoly::x()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at w0. Throws PoleAtPoint when den(w0) = 0.
  GaussianRational eval(const GaussianRational& w0) const {
    const GaussianRational d = den_.eval(w0);
    if (d.is_zero()) throw PoleAtPoint();
    return num_.eval(w0) / d;
  }

  /// Text form `[n0,n1,...]/[d0,d1,...]`, coefficients ascending in w.
  std::string str() const {
    auto list = [](const QPoly& p) {
      std::string s = "[";
      bool first = true;
      for (const auto& c : p.coeffs()) {
        if (!first) s += ",";
        s += c.str();
        first = false;
      }
      return s + "]";
    };
    return list(num_) + "/" + list(den_);
  }

  static RatFun parse(std::string_view text);

  RatFun operator-() const { return raw(-num_, den_); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  // Already-canonical pair; skips the gcd.
  static RatFun raw(QPoly num, QPoly den) {
    RatFun r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  QPoly num_;
  QPoly den_;
};

/// Canonical form of num/den.
inline RatFun ratfun_reduce(const QPoly& num, const QPoly& den) { return RatFun(num, den); }

/// D f = w f'(w), computed as (w num' den - w num den') / den^2 and reduced.
inline RatFun apply_D(const RatFun& f) {
  const QPoly& n = f.num();
  const QPoly& d = f.den();
  if (f.is_polynomial()) return RatFun(n.euler_derivative() * (GaussianRational(1) / d.leading()));
  return RatFun(n.euler_derivative() * d - n * d.euler_derivative(), d * d);
}

/// Polynomial overload: sum a_r w^r -> sum r a_r w^r.
inline QPoly apply_D(const QPoly& p) { return p.euler_derivative(); }

inline GaussianRational eval_at(const RatFun& f, const GaussianRational& w0) { return f.eval(w0); }

inline RatFun pow(const RatFun& f, long e) {
  if (e < 0) return pow(RatFun(1) / f, -e);
  RatFun result(1);
  RatFun base = f;
  auto k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

namespace detail {

inline QPoly parse_coeff_list(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [..] coefficient list");
  s = s.substr(1, s.size() - 2);
  std::vector<GaussianRational> coeffs;
  if (trim(s).empty()) return QPoly{};
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    coeffs.push_back(GaussianRational::parse(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return QPoly(std::move(coeffs));
}

}  // namespace detail

/// Accepts `[..]/[..]`, a bare `[..]` polynomial, or a scalar.
inline RatFun RatFun::parse(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty rational function");
  if (text.front() != '[') return RatFun(GaussianRational::parse(text));
  const auto close = text.find(']');
  if (close == std::string_view::npos) throw ParseError("unterminated coefficient list");
  QPoly num = detail::parse_coeff_list(text.substr(0, close + 1));
  std::string_view rest = detail::trim(text.substr(close + 1));
  if (rest.empty()) return RatFun(std::move(num));
  if (rest.front() != '/') throw ParseError("expected '/' between coefficient lists");
  QPoly den = detail::parse_coeff_list(rest.substr(1));
  return RatFun(std::move(num), std::move(den));
}

}  // namespace fibsum
