#pragma once

// Characteristic polynomial of order n: the annihilating recurrence of the
// sequence of n-th powers G_j^n, written as a polynomial in the weight w.

#include "fibsum/exact.hpp"
#include "fibsum/fib.hpp"
#include "fibsum/poly.hpp"
#include "fibsum/ratfun.hpp"

#include <stdexcept>
#include <vector>

namespace fibsum {

struct SingularWeight : std::domain_error {
  SingularWeight() : std::domain_error("singular weight") {}
};

/// Marker selecting the symbolic (rational function of w) mode.
struct Symbolic {};

/// (-1)^ceil(u/2) for u >= 0.
inline int ceil_half_sign(long u) { return ((u + 1) / 2) % 2 == 0 ? 1 : -1; }

/// Signed Fibonomial weights c_s = C(n+1, s)_F (-1)^ceil((n-s+1)/2), s = 0..n+1.
/// They satisfy sum_s c_s G_{j+s}^n = 0 for every j.
inline std::vector<Integer> annihilator_weights(int n) {
  std::vector<Integer> c;
  c.reserve(static_cast<std::size_t>(n) + 2);
  for (int s = 0; s <= n + 1; ++s) c.push_back(fibonomial(n + 1, s) * ceil_half_sign(n - s + 1));
  return c;
}

struct CharPoly {
  int n = 0;
  /// sum_s c_s w^{n-s+1}; degree n+1, constant term 1.
  QPoly poly;
};

inline CharPoly char_poly(int n) {
  if (n < 0) throw std::invalid_argument("char_poly: n must be nonnegative");
  const auto c = annihilator_weights(n);
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(n) + 2);
  for (int s = 0; s <= n + 1; ++s) coeffs[static_cast<std::size_t>(n - s + 1)] = GaussianRational(c[static_cast<std::size_t>(s)]);
  return {n, QPoly(std::move(coeffs))};
}

inline bool is_singular(int n, const GaussianRational& w) { return char_poly(n).poly.eval(w).is_zero(); }

}  // namespace fibsum
