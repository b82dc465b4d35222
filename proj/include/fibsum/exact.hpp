#pragma once

// Exact scalars: canonical rationals, Gaussian rationals over Q(i), and exact
// sign decisions for a + b*sqrt(5).

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fibsum {

using Integer = mpz_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("zero denominator") {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what)
      : std::invalid_argument("parse error: " + what) {}
};

namespace detail {

inline std::size_t hash_integer(const Integer& z) {
  std::size_t h = std::hash<int>{}(mpz_sgn(z.get_mpz_t()));
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("bad integer '" + std::string(s) + "'");
  }
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Canonical rational number: positive denominator, lowest terms, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  /// Builds num/den in lowest terms. Throws ZeroDenominator when den == 0.
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  /// Accepts `p`, `p/q`, with an optional leading sign.
  static Rational parse(std::string_view text) {
    text = detail::trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
    Integer num = detail::parse_integer(text.substr(0, slash));
    Integer den = detail::parse_integer(text.substr(slash + 1));
    return Rational(num, den);
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return from_mpq(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  std::size_t hash() const {
    return detail::hash_integer(q_.get_num()) * 31u + detail::hash_integer(q_.get_den());
  }

 private:
  mpq_class q_{0};
};

/// num/den in canonical form.
inline Rational rat_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// x^e for any integer e (negative exponents invert; 0^0 = 1).
inline Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw DivisionByZero();
    return pow(Rational(1) / x, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

/// Element re + im*i of Q(i). Every scalar of the summation engine lives here.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const Integer& v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Parses `p/q`, `i`, `-i`, `c/d*i`, `a/b+c/d*i`, `a/b-c/d*i`, `a+i`.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

  std::size_t hash() const { return re_.hash() * 1000003u ^ im_.hash(); }

 private:
  Rational re_;
  Rational im_;
};

enum class ArithOp { add, sub, mul, div };

inline GaussianRational gauss_arith(ArithOp op, const GaussianRational& x, const GaussianRational& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw std::logic_error("unknown arithmetic op");
}

/// z^e by repeated squaring; 0^0 = 1, negative e inverts.
inline GaussianRational pow(const GaussianRational& z, long e) {
  if (e < 0) return pow(GaussianRational(1) / z, -e);
  if (z.is_real()) return pow(z.re(), e);
  GaussianRational result(1);
  GaussianRational base = z;
  auto k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

inline std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part;
  if (im_.is_one()) {
    im_part = "i";
  } else if (im_ == Rational(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.str() + "*i";
  }
  if (re_.is_zero()) return im_part;
  // Mixed values always spell out the imaginary coefficient: a/b+c/d*i.
  const Rational mag = abs(im_);
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + mag.str() + "*i";
}

inline GaussianRational GaussianRational::parse(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return GaussianRational(Rational::parse(text));

  // Locate the sign separating the real part from the imaginary part: the last
  // '+' or '-' that is not the very first character.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = text.size(); p-- > 1;) {
    if (text[p] == '+' || text[p] == '-') {
      split = p;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? text : text.substr(split);

  im_text.remove_suffix(1);  // drop 'i'
  im_text = detail::trim(im_text);
  if (!im_text.empty() && im_text.back() == '*') {
    im_text.remove_suffix(1);
    im_text = detail::trim(im_text);
    if (im_text.empty() || im_text == "+" || im_text == "-") throw ParseError("missing coefficient before *i");
  }
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = Rational(1);
  } else if (im_text == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(im_text);
  }
  Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
  return {std::move(re), std::move(im)};
}

// ---------------------------------------------------------------------------
// QuadraticSurd
// ---------------------------------------------------------------------------

/// a + b*sqrt(5) with rational a, b.
struct QuadraticSurd {
  Rational a;
  Rational b;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Exact sign of a + b*sqrt(5), decided by comparing a^2 against 5 b^2.
inline int surd_sign(const QuadraticSurd& s) {
  const int sa = s.a.sign();
  const int sb = s.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger magnitude wins. sqrt(5) is irrational so the
  // squares never tie unless both are zero.
  const Rational lhs = s.a * s.a;
  const Rational rhs = Rational(5) * s.b * s.b;
  return lhs > rhs ? sa : sb;
}

}  // namespace fibsum

template <>
struct std::hash<fibsum::Rational> {
  std::size_t operator()(const fibsum::Rational& r) const noexcept { return r.hash(); }
};

template <>
struct std::hash<fibsum::GaussianRational> {
  std::size_t operator()(const fibsum::GaussianRational& z) const noexcept { return z.hash(); }
};
