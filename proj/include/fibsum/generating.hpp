#pragma once

// Infinite sums S_inf^n(w, r) and the exact convergence test behind them.

#include "fibsum/closed_form.hpp"
#include "fibsum/exact.hpp"
#include "fibsum/fib.hpp"

#include <stdexcept>

namespace fibsum {

struct Divergent : std::domain_error {
  Divergent() : std::domain_error("divergent weight") {}
};

/// phi^{2n} = (L_{2n} + F_{2n} sqrt 5) / 2.
inline QuadraticSurd golden_power_even(int n) {
  const long m = 2L * n;
  const Integer lucas = fib(m - 1) + fib(m + 1);
  return {Rational(lucas, 2), Rational(fib(m), 2)};
}

/// True iff |w|^2 phi^{2n} < 1, i.e. w^k G_k^n -> 0 for generic seeds.
/// Equality is treated as divergent.
inline bool converges(const GaussianRational& w, int n) {
  if (n < 1) throw std::invalid_argument("converges: n must be >= 1");
  const Rational q = w.norm();
  const QuadraticSurd p = golden_power_even(n);
  // 1 - q (a + b sqrt 5) > 0
  return surd_sign({Rational(1) - q * p.a, -(q * p.b)}) > 0;
}

/// Closed form of the infinite sum: the finite form with its tail dropped.
/// Throws Divergent unless converges(w, n), and SingularWeight at poles.
/// With `analytic` the convergence check is skipped.
inline NumericForm generating_function(int n, int r, const GaussianRational& w, bool analytic = false) {
  if (!analytic && !converges(w, n)) throw Divergent();
  NumericForm cf = closed_form(n, r, w);
  cf.tail.clear();
  cf.meta.extension = n >= 2 && r >= 1;
  return cf;
}

/// Symbolic generating function. Cases other than n = 1 or r = 0 are flagged
/// as extensions in the metadata.
inline SymbolicForm generating_function(int n, int r, Symbolic) {
  SymbolicForm cf = closed_form(n, r, Symbolic{});
  cf.tail.clear();
  cf.meta.extension = n >= 2 && r >= 1;
  return cf;
}

}  // namespace fibsum
