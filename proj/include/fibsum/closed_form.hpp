#pragma once

// Closed forms for S_k^n(w, r) = sum_{j=0}^k w^j j^r G_j^n.
//
// Writing the annihilating recurrence against w^j and shifting indices gives
//
//   S_k^n(w,0) * char(w) = H(w) - T_k(w),
//   H   = sum_s c_s sum_{j=0}^{s-1}   w^{j+n-s+1} G_j^n,
//   T_k = sum_s c_s sum_{j=k+1}^{k+s} w^{j+n-s+1} G_j^n.
//
// Since D^r S_k^n(w,0) = S_k^n(w,r) and D^q w^e = e^q w^e, the Leibniz rule gives
//
//   S_k^n(w,r) = sum_m C(r,m) A_n(w;m) [D^{r-m} H - D^{r-m} T_k].
//
// The tail exponents depend on k, so D^{r-m} produces polynomials in k.

#include "fibsum/a_functions.hpp"
#include "fibsum/char_poly.hpp"
#include "fibsum/fib.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibsum {

struct UnsupportedBasis : std::invalid_argument {
  UnsupportedBasis() : std::invalid_argument("basis change is only defined for n = 1") {}
};

/// shifted: tail in G_{k+1}^n .. G_{k+n+1}^n (any n).
/// standard: tail in G_k, G_{k+1} (n = 1 only).
enum class Basis { standard, shifted };

/// w^{k + w_exp_offset} * poly_k(k) * G_{k + offset}^n.
template <typename Coeff>
struct TailTerm {
  long offset = 0;
  long w_exp_offset = 0;
  Poly<Coeff> poly_k;

  friend bool operator==(const TailTerm&, const TailTerm&) = default;
};

struct ClosedFormMeta {
  bool singular = false;
  /// Set when the form goes beyond the cases with a published closed form
  /// (infinite sums with n >= 2 and r >= 1).
  bool extension = false;

  friend bool operator==(const ClosedFormMeta&, const ClosedFormMeta&) = default;
};

/// sum_j head[j] G_j^n + sum_t tail terms. `Coeff` is GaussianRational in
/// numeric mode (w holds the weight) and RatFun in symbolic mode (w empty).
template <typename Coeff>
struct ClosedForm {
  int n = 1;
  int r = 0;
  std::optional<GaussianRational> w;
  Basis basis = Basis::shifted;
  std::vector<Coeff> head;
  std::vector<TailTerm<Coeff>> tail;
  ClosedFormMeta meta;

  bool symbolic() const { return !w.has_value(); }

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

using NumericForm = ClosedForm<GaussianRational>;
using SymbolicForm = ClosedForm<RatFun>;

namespace detail {

inline std::optional<GaussianRational> weight_tag(const GaussianRational& w) { return w; }
inline std::optional<GaussianRational> weight_tag(const RatFun&) { return std::nullopt; }

template <typename Coeff>
std::vector<Coeff> powers(const Coeff& w, int count) {
  std::vector<Coeff> out;
  out.reserve(static_cast<std::size_t>(count));
  Coeff p(1);
  for (int e = 0; e < count; ++e) {
    out.push_back(p);
    p = p * w;
  }
  return out;
}

// Leibniz construction in the shifted basis.
template <typename Coeff>
ClosedForm<Coeff> leibniz_form(int n, int r, const Coeff& w) {
  if (n < 1) throw std::invalid_argument("closed_form: n must be >= 1");
  if (r < 0) throw std::invalid_argument("closed_form: r must be >= 0");
  const auto a = a_values(n, r, w);
  const auto c = annihilator_weights(n);
  const auto binom = binomial_row(r);
  const auto wpow = powers(w, n + 2);

  ClosedForm<Coeff> cf;
  cf.n = n;
  cf.r = r;
  cf.w = weight_tag(w);
  cf.basis = Basis::shifted;

  // Binomial weight times A-value, shared by every term.
  std::vector<Coeff> ba;
  for (int m = 0; m <= r; ++m) ba.push_back(Coeff(binom[static_cast<std::size_t>(m)]) * a[static_cast<std::size_t>(m)]);

  // Head: coefficient of G_j^n collects s > j with exponent e = j + n - s + 1.
  cf.head.assign(static_cast<std::size_t>(n) + 1, Coeff(0));
  for (int j = 0; j <= n; ++j) {
    Coeff acc(0);
    for (int s = j + 1; s <= n + 1; ++s) {
      const long e = j + n - s + 1;
      Coeff inner(0);
      for (int m = 0; m <= r; ++m) {
        Integer e_pow;
        mpz_ui_pow_ui(e_pow.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(r - m));
        if (e_pow == 0) continue;
        inner = inner + ba[static_cast<std::size_t>(m)] * Coeff(e_pow);
      }
      acc = acc + Coeff(c[static_cast<std::size_t>(s)]) * wpow[static_cast<std::size_t>(e)] * inner;
    }
    cf.head[static_cast<std::size_t>(j)] = acc;
  }

  // Tail: G_{k+t}^n for t = 1..n+1 collects s >= t with exponent k + t + n - s + 1.
  // Factor w^{k+t}; the remaining w^{n-s+1} goes into the coefficients.
  for (int t = 1; t <= n + 1; ++t) {
    Poly<Coeff> acc;
    for (int s = t; s <= n + 1; ++s) {
      const Coeff shift(static_cast<long>(t + n - s + 1));
      Poly<Coeff> inner;
      for (int m = 0; m <= r; ++m) {
        inner += shifted_power(shift, static_cast<unsigned>(r - m)) * ba[static_cast<std::size_t>(m)];
      }
      acc += inner * (Coeff(c[static_cast<std::size_t>(s)]) * wpow[static_cast<std::size_t>(n - s + 1)]);
    }
    cf.tail.push_back({t, t, -acc});
  }
  return cf;
}

// n = 1 construction in the standard basis: D^r applied to
// S_k(w,0) (1 - w - w^2) = (1-w) G_0 + w G_1 - w^{k+2} G_k - w^{k+1} G_{k+1}.
template <typename Coeff>
ClosedForm<Coeff> unit_power_form(int r, const Coeff& w) {
  if (r < 0) throw std::invalid_argument("closed_form: r must be >= 0");
  const auto a = a_values(1, r, w);
  const auto binom = binomial_row(r);

  ClosedForm<Coeff> cf;
  cf.n = 1;
  cf.r = r;
  cf.w = weight_tag(w);
  cf.basis = Basis::standard;

  Coeff g0(0), g1(0);
  for (int m = 0; m <= r; ++m) {
    const Coeff b(binom[static_cast<std::size_t>(m)]);
    const Coeff delta(m == r ? 1 : 0);
    g0 = g0 - b * (w - delta) * a[static_cast<std::size_t>(m)];
    g1 = g1 + b * a[static_cast<std::size_t>(m)];
  }
  cf.head = {g0, w * g1};

  // -w^{k+2} G_k sum_m C(r,m) (k+2)^m A(r-m), likewise for G_{k+1} with k+1.
  auto tail_poly = [&](long shift) {
    Poly<Coeff> acc;
    for (int m = 0; m <= r; ++m) {
      acc += shifted_power(Coeff(shift), static_cast<unsigned>(m)) *
             (Coeff(binom[static_cast<std::size_t>(m)]) * a[static_cast<std::size_t>(r - m)]);
    }
    return -acc;
  };
  cf.tail.push_back({0, 2, tail_poly(2)});
  cf.tail.push_back({1, 1, tail_poly(1)});
  return cf;
}

template <typename Coeff>
Coeff weight_of(const ClosedForm<Coeff>& cf) {
  if constexpr (std::is_same_v<Coeff, RatFun>) {
    return RatFun::w();
  } else {
    return *cf.w;
  }
}

template <typename Coeff>
Poly<Coeff> scaled(const Poly<Coeff>& p, const Coeff& w, long e) {
  if (e == 0) return p;
  return p * pow(w, e);
}

}  // namespace detail

/// Shifted-basis closed form at a numeric weight. Throws SingularWeight.
inline NumericForm closed_form(int n, int r, const GaussianRational& w) { return detail::leibniz_form(n, r, w); }

/// Shifted-basis closed form with rational-function coefficients in w.
inline SymbolicForm closed_form(int n, int r, Symbolic) { return detail::leibniz_form(n, r, RatFun::w()); }

/// n = 1 closed form built directly in the standard {G_k, G_{k+1}} basis.
inline NumericForm unit_power_closed_form(int r, const GaussianRational& w) { return detail::unit_power_form(r, w); }
inline SymbolicForm unit_power_closed_form(int r, Symbolic) { return detail::unit_power_form(r, RatFun::w()); }

/// Rewrites every tail term against the canonical exponent of its basis
/// (shifted: w^{k+t}; standard: w^{k+2} G_k and w^{k+1} G_{k+1}), merging
/// duplicates and filling absent offsets with zero polynomials.
template <typename Coeff>
ClosedForm<Coeff> canonicalize(ClosedForm<Coeff> cf) {
  const Coeff w = detail::weight_of(cf);
  cf.head.resize(static_cast<std::size_t>(cf.n) + 1, Coeff(0));
  std::vector<TailTerm<Coeff>> tail;
  if (cf.basis == Basis::standard) {
    if (cf.n != 1) throw UnsupportedBasis();
    tail = {{0, 2, {}}, {1, 1, {}}};
  } else {
    for (long t = 1; t <= cf.n + 1; ++t) tail.push_back({t, t, {}});
  }
  for (const auto& term : cf.tail) {
    auto it = std::find_if(tail.begin(), tail.end(), [&](const auto& x) { return x.offset == term.offset; });
    if (it == tail.end()) throw std::invalid_argument("tail offset outside the basis");
    it->poly_k += detail::scaled(term.poly_k, w, term.w_exp_offset - it->w_exp_offset);
  }
  cf.tail = std::move(tail);
  return cf;
}

/// Shifted {G_{k+1}, G_{k+2}} to standard {G_k, G_{k+1}} via G_{k+2} = G_k + G_{k+1}.
/// Standard forms pass through unchanged. n >= 2 throws UnsupportedBasis.
template <typename Coeff>
ClosedForm<Coeff> rebase_tail(const ClosedForm<Coeff>& in) {
  if (in.n != 1) throw UnsupportedBasis();
  if (in.basis == Basis::standard) return in;
  const auto cf = canonicalize(in);
  const Coeff w = detail::weight_of(cf);
  const auto& p1 = cf.tail[0].poly_k;  // w^{k+1} G_{k+1}
  const auto& p2 = cf.tail[1].poly_k;  // w^{k+2} G_{k+2}
  ClosedForm<Coeff> out = cf;
  out.basis = Basis::standard;
  out.tail = {{0, 2, p2}, {1, 1, p1 + p2 * w}};
  return out;
}

/// Inverse of rebase_tail, via G_k = G_{k+2} - G_{k+1}.
template <typename Coeff>
ClosedForm<Coeff> to_shifted(const ClosedForm<Coeff>& in) {
  if (in.basis == Basis::shifted) return in;
  if (in.n != 1) throw UnsupportedBasis();
  const auto cf = canonicalize(in);
  const Coeff w = detail::weight_of(cf);
  const auto& q0 = cf.tail[0].poly_k;  // w^{k+2} G_k
  const auto& q1 = cf.tail[1].poly_k;  // w^{k+1} G_{k+1}
  ClosedForm<Coeff> out = cf;
  out.basis = Basis::shifted;
  out.tail = {{1, 1, q1 - q0 * w}, {2, 2, q0}};
  return out;
}

template <typename Coeff>
ClosedForm<Coeff> with_basis(const ClosedForm<Coeff>& cf, Basis basis) {
  return basis == Basis::standard ? rebase_tail(cf) : to_shifted(cf);
}

/// Numeric closed form from a symbolic one by evaluating every coefficient at w0.
inline NumericForm specialize(const SymbolicForm& cf, const GaussianRational& w0) {
  NumericForm out;
  out.n = cf.n;
  out.r = cf.r;
  out.w = w0;
  out.basis = cf.basis;
  out.meta = cf.meta;
  try {
    for (const auto& h : cf.head) out.head.push_back(h.eval(w0));
    for (const auto& term : cf.tail) {
      std::vector<GaussianRational> coeffs;
      for (const auto& c : term.poly_k.coeffs()) coeffs.push_back(c.eval(w0));
      out.tail.push_back({term.offset, term.w_exp_offset, QPoly(std::move(coeffs))});
    }
  } catch (const PoleAtPoint&) {
    throw SingularWeight();
  }
  return out;
}

/// Value of a numeric closed form at upper limit k for the given seeds:
/// O(log k) big-number work for G_{k+t} and w^k, plus O(n r) scalar work.
inline GaussianRational evaluate_closed(const NumericForm& cf, long k, const Seeds& seeds) {
  if (!cf.w) throw std::invalid_argument("evaluate_closed needs a numeric closed form");
  if (k < 0) throw std::invalid_argument("evaluate_closed: k must be >= 0");
  const GaussianRational& w = *cf.w;
  const auto n = static_cast<unsigned long>(cf.n);

  GaussianRational total(0);
  for (std::size_t j = 0; j < cf.head.size(); ++j) {
    if (cf.head[j].is_zero()) continue;
    total += cf.head[j] * GaussianRational(pow(genfib(seeds, static_cast<long>(j)), static_cast<long>(n)));
  }
  if (cf.tail.empty()) return total;

  long lo = cf.tail.front().offset, hi = lo;
  for (const auto& t : cf.tail) {
    lo = std::min(lo, t.offset);
    hi = std::max(hi, t.offset);
  }
  // G_{k+lo}, G_{k+lo+1}, ... by one fast-doubling step and the recurrence.
  std::vector<Rational> g;
  g.push_back(genfib(seeds, k + lo));
  if (hi > lo) g.push_back(genfib(seeds, k + lo + 1));
  while (static_cast<long>(g.size()) <= hi - lo) g.push_back(g[g.size() - 1] + g[g.size() - 2]);

  const GaussianRational wk = pow(w, k);
  const GaussianRational kval(static_cast<long>(k));
  for (const auto& t : cf.tail) {
    if (t.poly_k.is_zero()) continue;
    const GaussianRational wfac = wk * pow(w, t.w_exp_offset);
    const Rational gpow = pow(g[static_cast<std::size_t>(t.offset - lo)], static_cast<long>(n));
    total += wfac * t.poly_k.eval(kval) * GaussianRational(gpow);
  }
  return total;
}

}  // namespace fibsum
