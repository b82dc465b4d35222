#pragma once

// Ground truth for the summation engine. Nothing here touches the closed-form
// machinery except run_sweep, which compares the two.

#include "fibsum/char_poly.hpp"
#include "fibsum/closed_form.hpp"
#include "fibsum/exact.hpp"
#include "fibsum/fib.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fibsum {

/// Direct evaluation of sum_{j=0}^k w^j j^r G_j^n (with j^0 = 1 and 0^0 = 1).
///
/// Runs on integers: with w = (a + b i)/q and G_j = X_j/d the sum equals
/// [sum_j (a+bi)^j q^{k-j} j^r X_j^n] / (q^k d^n), accumulated Horner style.
inline GaussianRational brute_sum(int n, int r, const GaussianRational& w, long k, const Seeds& seeds) {
  if (k < 0) throw std::invalid_argument("brute_sum: k must be >= 0");
  if (n < 0 || r < 0) throw std::invalid_argument("brute_sum: n and r must be >= 0");

  Integer q;
  mpz_lcm(q.get_mpz_t(), w.re().den().get_mpz_t(), w.im().den().get_mpz_t());
  const Integer a = w.re().num() * (q / w.re().den());
  const Integer b = w.im().num() * (q / w.im().den());
  Integer d;
  mpz_lcm(d.get_mpz_t(), seeds.g0.den().get_mpz_t(), seeds.g1.den().get_mpz_t());
  Integer x_prev = seeds.g0.num() * (d / seeds.g0.den());  // X_j
  Integer x_cur = seeds.g1.num() * (d / seeds.g1.den());   // X_{j+1}

  const bool real = b == 0;
  const bool unit_q = q == 1;
  Integer p_re = 1, p_im = 0;  // (a + b i)^j
  Integer acc_re = 0, acc_im = 0;
  Integer term, jr, tmp;

  for (long j = 0; j <= k; ++j) {
    if (!unit_q) {
      acc_re *= q;
      if (!real) acc_im *= q;
    }
    // j^r X_j^n
    mpz_ui_pow_ui(jr.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(r));
    if (jr != 0) {
      mpz_pow_ui(term.get_mpz_t(), x_prev.get_mpz_t(), static_cast<unsigned long>(n));
      term *= jr;
      if (term != 0) {
        if (real) {
          acc_re += p_re * term;
        } else {
          acc_re += p_re * term;
          acc_im += p_im * term;
        }
      }
    }
    if (j == k) break;
    // advance (a + b i)^j and X_j
    if (real) {
      p_re *= a;
    } else {
      tmp = p_re * a - p_im * b;
      p_im = p_re * b + p_im * a;
      p_re = tmp;
    }
    tmp = x_prev + x_cur;
    x_prev = std::move(x_cur);
    x_cur = std::move(tmp);
  }

  Integer den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
  Integer dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
  den *= dn;
  return {Rational(acc_re, den), Rational(acc_im, den)};
}

/// sum_{s=0}^{n+1} C(n+1,s)_F (-1)^ceil((n-s+1)/2) G_{j+s}^n; zero for every j.
inline Rational knuth_identity_residual(int n, long j, const Seeds& seeds) {
  Rational total(0);
  for (int s = 0; s <= n + 1; ++s) {
    const long u = n - s + 1;
    const int sign = ((u + 1) / 2) % 2 == 0 ? 1 : -1;
    total += Rational(fibonomial(n + 1, s) * sign) * pow(genfib(seeds, j + s), n);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepConfig {
  int n_max = 4;
  int r_max = 4;
  long k_max = 25;
  std::vector<GaussianRational> w_grid;
  std::vector<Seeds> seed_grid;
  /// Extra random rational seed pairs drawn from rng_seed.
  int trials = 2;
  std::uint64_t rng_seed = 20240601;

  /// w in {0, 1, -1, 2, 1/2, -1/2, 3, 2/3, 1/16, i, -i}, seeds {0..n_max}^2 plus (2,1).
  static SweepConfig defaults() {
    SweepConfig c;
    for (const char* w : {"0", "1", "-1", "2", "1/2", "-1/2", "3", "2/3", "1/16", "i", "-i"}) {
      c.w_grid.push_back(GaussianRational::parse(w));
    }
    return c;
  }
};

enum class CaseStatus { pass, fail, skipped_singular, skipped_divergent };

inline const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skipped_singular: return "skipped_singular";
    case CaseStatus::skipped_divergent: return "skipped_divergent";
  }
  return "unknown";
}

struct Counterexample {
  Seeds seeds;
  GaussianRational closed;
  GaussianRational brute;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// One (n, r, w, k) case; every seed pair of the grid is checked within it.
struct SweepCase {
  int n = 0;
  int r = 0;
  GaussianRational w;
  long k = 0;
  CaseStatus status = CaseStatus::pass;
  std::optional<Counterexample> counterexample;

  friend bool operator==(const SweepCase&, const SweepCase&) = default;
};

struct VerificationReport {
  std::vector<SweepCase> cases;

  std::size_t count(CaseStatus s) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.status == s; }));
  }
  std::size_t passed() const { return count(CaseStatus::pass); }
  std::size_t failed() const { return count(CaseStatus::fail); }
  std::size_t skipped() const { return count(CaseStatus::skipped_singular) + count(CaseStatus::skipped_divergent); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Synthesizes the closed form under test; replaceable for fault injection.
using Synthesizer = std::function<NumericForm(int n, int r, const GaussianRational& w)>;

inline NumericForm default_synthesizer(int n, int r, const GaussianRational& w) { return closed_form(n, r, w); }

/// Full seed list of a config: the explicit grid (or {0..n_max}^2 plus (2,1)
/// when empty), then `trials` random rational pairs.
inline std::vector<Seeds> sweep_seeds(const SweepConfig& config) {
  std::vector<Seeds> seeds = config.seed_grid;
  if (seeds.empty()) {
    for (int a = 0; a <= config.n_max; ++a) {
      for (int b = 0; b <= config.n_max; ++b) seeds.push_back({Rational(a), Rational(b)});
    }
    if (std::find(seeds.begin(), seeds.end(), Seeds::lucas()) == seeds.end()) seeds.push_back(Seeds::lucas());
  }
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  for (int t = 0; t < config.trials; ++t) {
    // Draw order is fixed so the pairs depend only on rng_seed.
    const long n0 = num(rng), d0 = den(rng), n1 = num(rng), d1 = den(rng);
    seeds.push_back({Rational(Integer(n0), Integer(d0)), Rational(Integer(n1), Integer(d1))});
  }
  return seeds;
}

namespace detail {

inline bool case_less(const SweepCase& x, const SweepCase& y) {
  const std::string wx = x.w.str(), wy = y.w.str();
  return std::tie(x.n, x.r, wx, x.k) < std::tie(y.n, y.r, wy, y.k);
}

inline std::vector<SweepCase> sweep_slice(int n, const SweepConfig& config, const std::vector<Seeds>& seeds,
                                          const Synthesizer& synth) {
  std::vector<SweepCase> out;
  for (int r = 0; r <= config.r_max; ++r) {
    for (const auto& w : config.w_grid) {
      std::optional<NumericForm> cf;
      if (!is_singular(n, w)) cf = synth(n, r, w);
      for (long k = 0; k <= config.k_max; ++k) {
        SweepCase c{n, r, w, k, CaseStatus::pass, std::nullopt};
        if (!cf) {
          c.status = CaseStatus::skipped_singular;
        } else {
          for (const auto& s : seeds) {
            GaussianRational closed = evaluate_closed(*cf, k, s);
            GaussianRational brute = brute_sum(n, r, w, k, s);
            if (!(closed == brute)) {
              c.status = CaseStatus::fail;
              c.counterexample = Counterexample{s, std::move(closed), std::move(brute)};
              break;
            }
          }
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Compares closed-form evaluation against brute_sum for every n in 1..n_max,
/// r in 0..r_max, w in the grid and k in 0..k_max. Singular weights are
/// recorded as skipped, never passed. Slices run concurrently per n; the
/// report is sorted by (n, r, w, k) so it does not depend on input order.
inline VerificationReport run_sweep(const SweepConfig& config, const Synthesizer& synth = default_synthesizer) {
  const auto seeds = sweep_seeds(config);
  std::vector<std::future<std::vector<SweepCase>>> jobs;
  for (int n = 1; n <= config.n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [n, &config, &seeds, &synth] {
      return detail::sweep_slice(n, config, seeds, synth);
    }));
  }
  VerificationReport report;
  for (auto& j : jobs) {
    auto part = j.get();
    report.cases.insert(report.cases.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(report.cases.begin(), report.cases.end(), detail::case_less);
  return report;
}

}  // namespace fibsum
