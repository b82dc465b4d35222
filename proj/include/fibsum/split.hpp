#pragma once

// Alternating sums over even and odd indices from the closed form at w = i.
//
//   sum_{j=0}^{2K} i^j j^r G_j^n = 2^r sum_{j=0}^K (-1)^j j^r G_{2j}^n
//                                + i sum_{j=1}^K (-1)^{j-1} (2j-1)^r G_{2j-1}^n
//
// so the real part of S_{2K}^n(i, r) gives the even sum and the imaginary part
// gives the odd sum.

#include "fibsum/closed_form.hpp"

#include <vector>

namespace fibsum {

using RPoly = Poly<Rational>;

/// (-1)^K P(K) G_{2K + offset}^n.
struct AlternatingTail {
  long offset = 0;
  RPoly poly_K;

  friend bool operator==(const AlternatingTail&, const AlternatingTail&) = default;
};

/// sum_j head[j] G_j^n + (-1)^K sum_t P_t(K) G_{2K+t}^n.
struct AlternatingForm {
  int n = 1;
  int r = 0;
  std::vector<Rational> head;
  std::vector<AlternatingTail> tail;

  friend bool operator==(const AlternatingForm&, const AlternatingForm&) = default;
};

/// even: sum_{j=0}^K (-1)^j j^r G_{2j}^n.
/// odd:  sum_{j=1}^K (-1)^{j-1} (2j-1)^r G_{2j-1}^n.
struct EvenOddSplit {
  int n = 1;
  int r = 0;
  AlternatingForm even;
  AlternatingForm odd;
};

namespace detail {

inline RPoly real_part(const QPoly& p) {
  std::vector<Rational> c;
  for (const auto& z : p.coeffs()) c.push_back(z.re());
  return RPoly(std::move(c));
}

inline RPoly imag_part(const QPoly& p) {
  std::vector<Rational> c;
  for (const auto& z : p.coeffs()) c.push_back(z.im());
  return RPoly(std::move(c));
}

}  // namespace detail

/// Throws SingularWeight when char_poly(n)(i) = 0.
inline EvenOddSplit split_alternating(int n, int r) {
  const GaussianRational i = GaussianRational::i();
  const NumericForm cf = canonicalize(closed_form(n, r, i));

  // Upper limit 2K: i^{2K + e} = (-1)^K i^e, and P(k) becomes P(2K).
  struct Term {
    long offset;
    QPoly poly;
  };
  std::vector<Term> terms;
  for (const auto& t : cf.tail) {
    const QPoly p = t.poly_k.scale_argument(GaussianRational(2)) * pow(i, t.w_exp_offset);
    if (n == 1) {
      // G_{2K+t} = F_{t-1} G_{2K} + F_t G_{2K+1}
      terms.push_back({0, p * GaussianRational(fib(t.offset - 1))});
      terms.push_back({1, p * GaussianRational(fib(t.offset))});
    } else {
      terms.push_back({t.offset, p});
    }
  }
  std::vector<long> offsets;
  if (n == 1) {
    offsets = {0, 1};
  } else {
    for (long t = 1; t <= n + 1; ++t) offsets.push_back(t);
  }

  const Rational even_scale = Rational(1) / pow(Rational(2), r);
  EvenOddSplit out{n, r, {n, r, {}, {}}, {n, r, {}, {}}};
  for (const auto& h : cf.head) {
    out.even.head.push_back(h.re() * even_scale);
    out.odd.head.push_back(h.im());
  }
  for (long off : offsets) {
    QPoly acc;
    for (const auto& t : terms) {
      if (t.offset == off) acc += t.poly;
    }
    out.even.tail.push_back({off, detail::real_part(acc) * even_scale});
    out.odd.tail.push_back({off, detail::imag_part(acc)});
  }
  return out;
}

/// sum_{j=1}^K (-1)^{j-1} j^r G_{2j-1}^n, from j^r = 2^{-r} sum_q C(r,q) (2j-1)^q.
inline AlternatingForm odd_index_weighted_by_j(int n, int r) {
  const auto binom = detail::binomial_row(r);
  AlternatingForm out{n, r, std::vector<Rational>(static_cast<std::size_t>(n) + 1), {}};
  const Rational scale = Rational(1) / pow(Rational(2), r);
  for (int q = 0; q <= r; ++q) {
    const AlternatingForm odd = split_alternating(n, q).odd;
    const Rational weight = Rational(binom[static_cast<std::size_t>(q)]) * scale;
    for (std::size_t j = 0; j < odd.head.size(); ++j) out.head[j] += odd.head[j] * weight;
    if (out.tail.empty()) {
      for (const auto& t : odd.tail) out.tail.push_back({t.offset, {}});
    }
    for (std::size_t t = 0; t < odd.tail.size(); ++t) out.tail[t].poly_K += odd.tail[t].poly_K * weight;
  }
  return out;
}

/// Value at upper limit K for the given seeds.
inline Rational evaluate_alternating(const AlternatingForm& f, long K, const Seeds& seeds) {
  Rational total(0);
  for (std::size_t j = 0; j < f.head.size(); ++j) {
    if (f.head[j].is_zero()) continue;
    total += f.head[j] * pow(genfib(seeds, static_cast<long>(j)), f.n);
  }
  Rational tail(0);
  const Rational kval(K);
  for (const auto& t : f.tail) {
    if (t.poly_K.is_zero()) continue;
    tail += t.poly_K.eval(kval) * pow(genfib(seeds, 2 * K + t.offset), f.n);
  }
  if (K % 2 != 0) tail = -tail;
  return total + tail;
}

}  // namespace fibsum
