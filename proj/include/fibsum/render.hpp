#pragma once

// Human-readable text and LaTeX renderings of closed forms. JSON (json_io.hpp)
// is the stable interchange format; these are for reading.

#include "fibsum/closed_form.hpp"
#include "fibsum/split.hpp"

#include <string>
#include <vector>

namespace fibsum {

enum class Style { text, latex };

namespace render_detail {

inline constexpr const char* kMinus = "−";
inline constexpr const char* kDot = "·";

inline std::string superscript(long e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) s += c == '-' ? "⁻" : digits[c - '0'];
  return s;
}

inline std::string power(const std::string& base, long e, Style st) {
  if (e == 1) return base;
  if (st == Style::latex) return base + "^{" + std::to_string(e) + "}";
  return base + superscript(e);
}

inline std::string rational(const Rational& q, Style st) {
  if (st == Style::latex && !q.is_integer()) {
    return "\\frac{" + q.num().get_str() + "}{" + q.den().get_str() + "}";
  }
  return q.str();
}

inline std::string signed_join(const std::vector<std::pair<int, std::string>>& terms, Style st) {
  const std::string minus = st == Style::latex ? "-" : kMinus;
  std::string out;
  for (const auto& [sign, body] : terms) {
    if (out.empty()) {
      out = (sign < 0 ? minus : "") + body;
    } else {
      out += (sign < 0 ? " " + minus + " " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

/// Polynomial with rational coefficients, descending powers: k²−2k+5.
inline std::string real_poly(const RPoly& p, const std::string& var, Style st) {
  const std::string minus = st == Style::latex ? "-" : kMinus;
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Rational c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    std::string body;
    if (i == 0) {
      body = rational(mag, st);
    } else {
      std::string coeff;
      if (!mag.is_one()) coeff = rational(mag, st) + (mag.is_integer() || st == Style::latex ? "" : kDot);
      body = coeff + power(var, i, st);
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? minus : "") + body;
    } else {
      out += (c.sign() < 0 ? minus : "+") + body;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string gauss_poly(const QPoly& p, const std::string& var, Style st) {
  std::vector<std::pair<int, std::string>> terms;
  for (long i = p.degree(); i >= 0; --i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string coeff = c.is_real() ? rational(abs(c.re()), st) : "(" + c.str() + ")";
    const int sign = c.is_real() ? c.re().sign() : 1;
    if (i == 0) {
      terms.push_back({sign, coeff});
    } else {
      const bool unit = c.is_real() && abs(c.re()).is_one();
      terms.push_back({sign, (unit ? "" : coeff + (st == Style::latex ? " " : kDot)) + power(var, i, st)});
    }
  }
  return signed_join(terms, st);
}

inline std::string ratfun(const RatFun& f, Style st) {
  const std::string num = gauss_poly(f.num(), "w", st);
  if (f.is_polynomial()) return "(" + num + ")";
  const std::string den = gauss_poly(f.den(), "w", st);
  if (st == Style::latex) return "\\frac{" + num + "}{" + den + "}";
  return "(" + num + ")/(" + den + ")";
}

inline bool all_real(const QPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) return false;
  }
  return true;
}

inline RPoly real_of(const QPoly& p) {
  std::vector<Rational> c;
  for (const auto& z : p.coeffs()) c.push_back(z.re());
  return RPoly(std::move(c));
}

/// Splits a nonzero real polynomial into sign * magnitude * primitive part,
/// with the primitive part's leading coefficient positive.
struct Factored {
  int sign;
  Rational magnitude;
  RPoly primitive;
};

inline Factored factor_content(const RPoly& p) {
  Integer g = 0, l = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational content(g, l);
  const int sign = p.leading().sign();
  return {sign, content, p * (Rational(sign) / content)};
}

/// One product term: [magnitude·][(poly)·][weight^(..)·]G.
inline std::pair<int, std::string> real_term(const RPoly& p, const std::string& var, const std::vector<std::string>& factors,
                                             Style st) {
  const auto f = factor_content(p);
  const std::string dot = st == Style::latex ? " " : kDot;
  std::vector<std::string> parts;
  const bool unit_poly = f.primitive.degree() == 0;
  if (!f.magnitude.is_one() || (unit_poly && factors.empty())) parts.push_back(rational(f.magnitude, st));
  if (!unit_poly) {
    const bool monomial = f.primitive.size() == static_cast<std::size_t>(f.primitive.degree() + 1) &&
                          f.primitive.leading().is_one() &&
                          std::all_of(f.primitive.coeffs().begin(), f.primitive.coeffs().end() - 1,
                                      [](const Rational& c) { return c.is_zero(); });
    const std::string body = real_poly(f.primitive, var, st);
    parts.push_back(monomial ? body : (st == Style::latex ? "\\left(" + body + "\\right)" : "(" + body + ")"));
  }
  for (const auto& x : factors) parts.push_back(x);
  std::string out;
  for (const auto& x : parts) out += (out.empty() ? "" : dot) + x;
  return {f.sign, out};
}

inline std::string weight_base(const GaussianRational& w, Style st) {
  if (w.is_real() && w.re().is_integer() && w.re().sign() >= 0) return w.str();
  if (w == GaussianRational::i()) return "i";
  if (w.is_real()) {
    if (st == Style::latex) return "\\left(" + rational(w.re(), st) + "\\right)";
    return "(" + std::string(w.re().sign() < 0 ? kMinus : "") + abs(w.re()).str() + ")";
  }
  return "(" + w.str() + ")";
}

inline std::string g_symbol(const std::string& index, int n, Style st) {
  if (st == Style::latex) {
    std::string g = "G_{" + index + "}";
    return n == 1 ? g : g + "^{" + std::to_string(n) + "}";
  }
  const bool compound = index.find_first_of("+-") != std::string::npos;
  return power("G" + (compound ? "(" + index + ")" : index), n, st);
}

inline std::string k_index(const std::string& var, long offset) {
  if (offset == 0) return var;
  return var + (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
}

inline std::string weight_factor(const GaussianRational& w, long e, Style st) {
  const std::string exp = k_index("k", e);
  if (st == Style::latex) return weight_base(w, st) + "^{" + exp + "}";
  return weight_base(w, st) + "^(" + exp + ")";
}

}  // namespace render_detail

inline std::string render(const NumericForm& cf, Style st = Style::text) {
  using namespace render_detail;
  std::vector<std::pair<int, std::string>> terms;
  const GaussianRational& w = *cf.w;
  const std::string dot = st == Style::latex ? " " : kDot;
  auto push = [&](const QPoly& p, const std::vector<std::string>& factors) {
    if (p.is_zero()) return;
    if (all_real(p)) {
      terms.push_back(real_term(real_of(p), "k", factors, st));
      return;
    }
    std::string body = p.degree() == 0 ? gauss_poly(p, "k", st) : "(" + gauss_poly(p, "k", st) + ")";
    for (const auto& x : factors) body += dot + x;
    terms.push_back({1, body});
  };
  for (std::size_t j = 0; j < cf.head.size(); ++j) {
    push(QPoly::constant(cf.head[j]), {g_symbol(std::to_string(j), cf.n, st)});
  }
  for (const auto& t : cf.tail) {
    std::vector<std::string> factors;
    if (!w.is_one()) factors.push_back(weight_factor(w, t.w_exp_offset, st));
    factors.push_back(g_symbol(k_index("k", t.offset), cf.n, st));
    push(t.poly_k, factors);
  }
  return signed_join(terms, st);
}

inline std::string render(const SymbolicForm& cf, Style st = Style::text) {
  using namespace render_detail;
  const std::string dot = st == Style::latex ? " " : kDot;
  std::vector<std::pair<int, std::string>> terms;
  for (std::size_t j = 0; j < cf.head.size(); ++j) {
    if (cf.head[j].is_zero()) continue;
    terms.push_back({1, ratfun(cf.head[j], st) + dot + g_symbol(std::to_string(j), cf.n, st)});
  }
  for (const auto& t : cf.tail) {
    if (t.poly_k.is_zero()) continue;
    std::string poly;
    for (long i = t.poly_k.degree(); i >= 0; --i) {
      const auto& c = t.poly_k[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      if (!poly.empty()) poly += " + ";
      poly += ratfun(c, st);
      if (i > 0) poly += dot + power("k", i, st);
    }
    const std::string wf = st == Style::latex ? "w^{" + k_index("k", t.w_exp_offset) + "}"
                                              : "w^(" + k_index("k", t.w_exp_offset) + ")";
    terms.push_back({1, "[" + poly + "]" + dot + wf + dot + g_symbol(k_index("k", t.offset), cf.n, st)});
  }
  return signed_join(terms, st);
}

inline std::string render(const AlternatingForm& f, Style st = Style::text) {
  using namespace render_detail;
  std::vector<std::pair<int, std::string>> terms;
  const std::string sign_factor = st == Style::latex ? "(-1)^{K}" : "(" + std::string(kMinus) + "1)^K";
  for (std::size_t j = 0; j < f.head.size(); ++j) {
    if (f.head[j].is_zero()) continue;
    terms.push_back(real_term(RPoly::constant(f.head[j]), "K", {g_symbol(std::to_string(j), f.n, st)}, st));
  }
  for (const auto& t : f.tail) {
    if (t.poly_K.is_zero()) continue;
    terms.push_back(real_term(t.poly_K, "K", {sign_factor, g_symbol(k_index("2K", t.offset), f.n, st)}, st));
  }
  return signed_join(terms, st);
}

}  // namespace fibsum
