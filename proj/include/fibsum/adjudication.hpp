#pragma once

// Term-by-term evaluation of the four-term general-n identity as it is
// commonly written:
//
//   S = A(r) G_0^n
//     + sum_m C(r,m) A(m) sum_{j=1}^n j^{r-m} w^j G_j^n
//     + sum_m C(r,m) A(m) sum_{s=0}^{n}   c_s sum_{j=0}^{s-1}   (j+n-s+1)^{r-m} w^{j+n-s+1} G_j^n
//     (+/-) sum_m C(r,m) A(m) sum_{s=0}^{n+1} c_s sum_{j=k+1}^{k+s} (j+n-s+1)^{r-m} w^{j+n-s+1} G_j^n
//
// Two readings are parameterized: the sign of the boundary (fourth) term, and
// whether ceil(u) in the sign exponent is the usual ceiling or "smallest
// integer strictly greater than u". docs/general_identity_check.md records
// which combination the oracle accepts.

#include "fibsum/a_functions.hpp"
#include "fibsum/fib.hpp"

#include <vector>

namespace fibsum {

enum class BoundarySign { plus, minus };
enum class CeilingReading { usual, strict };

struct IdentityReading {
  BoundarySign boundary = BoundarySign::plus;
  CeilingReading ceiling = CeilingReading::usual;
};

struct IdentityTerms {
  GaussianRational first;
  GaussianRational second;
  GaussianRational third;
  GaussianRational fourth;

  GaussianRational total() const { return first + second + third + fourth; }
};

namespace detail {

inline int reading_sign(long u, CeilingReading c) {
  // u >= 0; exponent is ceil(u/2) or floor(u/2) + 1.
  const long e = c == CeilingReading::usual ? (u + 1) / 2 : u / 2 + 1;
  return e % 2 == 0 ? 1 : -1;
}

inline Integer ipow(long base, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

}  // namespace detail

/// Evaluates each of the four terms at (n, r, w, k, seeds) under a reading.
/// The A-values come from the recursion with the same ceiling reading, so the
/// strict reading is self-consistent. Throws SingularWeight at poles.
inline IdentityTerms literal_identity_terms(int n, int r, const GaussianRational& w, long k, const Seeds& seeds,
                                            IdentityReading reading) {
  std::vector<Integer> c;
  for (int s = 0; s <= n + 1; ++s) c.push_back(fibonomial(n + 1, s) * detail::reading_sign(n - s + 1, reading.ceiling));

  QPoly chr;
  {
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(n) + 2);
    for (int s = 0; s <= n + 1; ++s) coeffs[static_cast<std::size_t>(n - s + 1)] = GaussianRational(c[static_cast<std::size_t>(s)]);
    chr = QPoly(std::move(coeffs));
  }
  const GaussianRational base = chr.eval(w);
  if (base.is_zero()) throw SingularWeight();
  std::vector<GaussianRational> a{GaussianRational(1) / base};
  {
    std::vector<GaussianRational> d_char{base};
    QPoly p = chr;
    for (int q = 1; q <= r; ++q) {
      p = p.euler_derivative();
      d_char.push_back(p.eval(w));
    }
    for (int m = 1; m <= r; ++m) {
      const auto binom = detail::binomial_row(m);
      GaussianRational acc(0);
      for (int j = 0; j < m; ++j) acc += GaussianRational(binom[static_cast<std::size_t>(j)]) * a[static_cast<std::size_t>(j)] * d_char[static_cast<std::size_t>(m - j)];
      a.push_back(-acc / base);
    }
  }
  const auto binom = detail::binomial_row(r);
  auto gn = [&](long j) { return GaussianRational(pow(genfib(seeds, j), n)); };

  IdentityTerms out;
  out.first = a[static_cast<std::size_t>(r)] * gn(0);
  for (int m = 0; m <= r; ++m) {
    const GaussianRational ba = GaussianRational(binom[static_cast<std::size_t>(m)]) * a[static_cast<std::size_t>(m)];
    for (long j = 1; j <= n; ++j) {
      out.second += ba * GaussianRational(detail::ipow(j, r - m)) * pow(w, j) * gn(j);
    }
    for (int s = 0; s <= n; ++s) {
      for (long j = 0; j <= s - 1; ++j) {
        const long e = j + n - s + 1;
        out.third += ba * GaussianRational(c[static_cast<std::size_t>(s)] * detail::ipow(e, r - m)) * pow(w, e) * gn(j);
      }
    }
    for (int s = 0; s <= n + 1; ++s) {
      for (long j = k + 1; j <= k + s; ++j) {
        const long e = j + n - s + 1;
        out.fourth += ba * GaussianRational(c[static_cast<std::size_t>(s)] * detail::ipow(e, r - m)) * pow(w, e) * gn(j);
      }
    }
  }
  if (reading.boundary == BoundarySign::minus) out.fourth = -out.fourth;
  return out;
}

}  // namespace fibsum
