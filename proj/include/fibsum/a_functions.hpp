#pragma once

// The functions A_n(w; m) = D^m (1 / char_poly(n)), computed by the triangular
// recursion obtained from applying D^m to A_n(w;0) * char_poly(n)(w) = 1.

#include "fibsum/char_poly.hpp"

#include <vector>

namespace fibsum {

namespace detail {

inline GaussianRational lift(const QPoly& p, const GaussianRational& w) { return p.eval(w); }
inline RatFun lift(const QPoly& p, const RatFun&) { return RatFun(p); }

inline std::vector<Integer> binomial_row(int r) {
  std::vector<Integer> row(static_cast<std::size_t>(r) + 1);
  mpz_class b = 1;
  for (int m = 0; m <= r; ++m) {
    row[static_cast<std::size_t>(m)] = b;
    b = b * (r - m) / (m + 1);
  }
  return row;
}

// A-values for m = 0..r at weight w (GaussianRational or RatFun::w()).
template <typename Coeff>
std::vector<Coeff> a_values(int n, int r, const Coeff& w) {
  const QPoly chr = char_poly(n).poly;
  const Coeff base = lift(chr, w);
  if (base.is_zero()) throw SingularWeight();

  // D^p char_poly for p = 1..r (the constant term drops out).
  std::vector<Coeff> d_char;
  d_char.reserve(static_cast<std::size_t>(r) + 1);
  QPoly p = chr;
  d_char.push_back(base);
  for (int q = 1; q <= r; ++q) {
    p = p.euler_derivative();
    d_char.push_back(lift(p, w));
  }

  std::vector<Coeff> a;
  a.reserve(static_cast<std::size_t>(r) + 1);
  a.push_back(Coeff(1) / base);
  for (int m = 1; m <= r; ++m) {
    const auto binom = binomial_row(m);
    Coeff acc(0);
    for (int j = 0; j < m; ++j) {
      acc = acc + Coeff(binom[static_cast<std::size_t>(j)]) * a[static_cast<std::size_t>(j)] *
                      d_char[static_cast<std::size_t>(m - j)];
    }
    a.push_back((-acc) / base);
  }
  return a;
}

}  // namespace detail

/// A_n(w; m) for m = 0..r. `values` are exact scalars (numeric mode) or
/// reduced rational functions of w (symbolic mode).
template <typename Coeff>
struct AFunctions {
  int n = 0;
  int r = 0;
  std::vector<Coeff> values;
};

/// Numeric mode. Throws SingularWeight when char_poly(n)(w) = 0.
inline AFunctions<GaussianRational> a_functions(int n, int r, const GaussianRational& w) {
  return {n, r, detail::a_values(n, r, w)};
}

inline AFunctions<RatFun> a_functions(int n, int r, Symbolic) {
  return {n, r, detail::a_values(n, r, RatFun::w())};
}

/// A(m) for w = 1: A(m) = -delta_{m0} - sum_{j<m} C(m,j) (2^{m-j} + 1) A(j).
inline std::vector<Rational> classic_a(int m_max) {
  std::vector<Rational> a;
  for (int m = 0; m <= m_max; ++m) {
    const auto binom = detail::binomial_row(m);
    Rational acc = m == 0 ? Rational(-1) : Rational(0);
    for (int j = 0; j < m; ++j) {
      Integer two_pow = Integer(1) << static_cast<mp_bitcnt_t>(m - j);
      acc -= Rational(binom[static_cast<std::size_t>(j)] * (two_pow + 1)) * a[static_cast<std::size_t>(j)];
    }
    a.push_back(acc);
  }
  return a;
}

/// Abar(p) for w = -1: Abar(p) = delta_{p0} + sum_{j<p} C(p,j) (2^{p-j} - 1) Abar(j).
inline std::vector<Rational> bar_a(int p_max) {
  std::vector<Rational> a;
  for (int p = 0; p <= p_max; ++p) {
    const auto binom = detail::binomial_row(p);
    Rational acc = p == 0 ? Rational(1) : Rational(0);
    for (int j = 0; j < p; ++j) {
      Integer two_pow = Integer(1) << static_cast<mp_bitcnt_t>(p - j);
      acc += Rational(binom[static_cast<std::size_t>(j)] * (two_pow - 1)) * a[static_cast<std::size_t>(j)];
    }
    a.push_back(acc);
  }
  return a;
}

}  // namespace fibsum
