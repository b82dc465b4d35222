#pragma once

// Fibonacci numbers over all integer indices, generalized Fibonacci sequences
// with rational seeds, and Fibonomial coefficients.

#include "fibsum/exact.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fibsum {

struct OutOfRange : std::out_of_range {
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// Seeds (G_0, G_1) of a sequence with G_{i+1} = G_i + G_{i-1}.
struct Seeds {
  Rational g0;
  Rational g1;

  static Seeds fibonacci() { return {Rational(0), Rational(1)}; }
  static Seeds lucas() { return {Rational(2), Rational(1)}; }

  /// `G0,G1`, each component a rational such as `-1/2`.
  static Seeds parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("seeds must be 'G0,G1'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  }

  std::string str() const { return g0.str() + "," + g1.str(); }

  friend bool operator==(const Seeds&, const Seeds&) = default;
};

struct IndexedValue {
  long index;
  Rational value;
};

namespace detail {

inline constexpr long kFibTableLimit = 64;

// F_0 .. F_64; F_64 still fits in 64 bits.
inline const std::array<Integer, kFibTableLimit + 1>& fib_table() {
  static const std::array<Integer, kFibTableLimit + 1> table = [] {
    std::array<Integer, kFibTableLimit + 1> t;
    std::uint64_t a = 0, b = 1;
    for (long i = 0; i <= kFibTableLimit; ++i) {
      t[static_cast<std::size_t>(i)] = Integer(static_cast<unsigned long>(a));
      const std::uint64_t next = a + b;
      a = b;
      b = next;
    }
    return t;
  }();
  return table;
}

// (F_m, F_{m+1}) for m >= 0 by fast doubling.
inline std::pair<Integer, Integer> fib_pair(unsigned long m) {
  if (m < static_cast<unsigned long>(kFibTableLimit)) {
    const auto& t = fib_table();
    return {t[m], t[m + 1]};
  }
  auto [a, b] = fib_pair(m >> 1);
  // F_{2j} = F_j (2 F_{j+1} - F_j),  F_{2j+1} = F_j^2 + F_{j+1}^2
  Integer c = a * (2 * b - a);
  Integer d = a * a + b * b;
  if (m & 1u) return {d, c + d};
  return {std::move(c), std::move(d)};
}

inline bool odd(long i) { return (i % 2) != 0; }

}  // namespace detail

/// F_i for any integer i, with F_{-i} = (-1)^{i+1} F_i.
inline Integer fib(long i) {
  if (i >= 0) {
    if (i <= detail::kFibTableLimit) return detail::fib_table()[static_cast<std::size_t>(i)];
    return detail::fib_pair(static_cast<unsigned long>(i)).first;
  }
  Integer f = fib(-i);
  return detail::odd(-i) ? f : Integer(-f);
}

/// (F_{i-1}, F_i) for any integer i, with one fast-doubling pass for i > 0.
inline std::pair<Integer, Integer> fib_adjacent(long i) {
  if (i >= 1) {
    auto [a, b] = detail::fib_pair(static_cast<unsigned long>(i - 1));
    return {std::move(a), std::move(b)};
  }
  return {fib(i - 1), fib(i)};
}

/// G_i = F_{i-1} G_0 + F_i G_1, valid for every integer i.
inline Rational genfib(const Seeds& s, long i) {
  auto [prev, cur] = fib_adjacent(i);
  return Rational(prev) * s.g0 + Rational(cur) * s.g1;
}

/// Fibonomial coefficient prod_{j=1}^{q} F_{p-q+j} / F_j.
inline Integer fibonomial(long p, long q) {
  if (p < 0 || q < 0 || q > p) {
    throw OutOfRange("fibonomial(" + std::to_string(p) + ", " + std::to_string(q) + ") out of range");
  }
  Integer num = 1;
  Integer den = 1;
  for (long j = 1; j <= q; ++j) {
    num *= fib(p - q + j);
    den *= fib(j);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("fibonomial product is not an integer");
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace fibsum
