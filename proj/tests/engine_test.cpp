#include <fibsum/a_functions.hpp>
#include <fibsum/char_poly.hpp>
#include <fibsum/closed_form.hpp>
#include <fibsum/generating.hpp>
#include <fibsum/oracle.hpp>

#include <gtest/gtest.h>

#include <random>

#include "interval_oracle.hpp"

using namespace fibsum;

namespace {

GaussianRational g(const char* s) { return GaussianRational::parse(s); }

QPoly poly(std::initializer_list<const char*> c) {
  std::vector<GaussianRational> v;
  for (const char* s : c) v.push_back(g(s));
  return QPoly(std::move(v));
}

QPoly ipoly(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

std::vector<GaussianRational> heads(std::initializer_list<const char*> c) {
  std::vector<GaussianRational> v;
  for (const char* s : c) v.push_back(g(s));
  return v;
}

const std::vector<const char*> kWeights{"0", "1", "-1", "2", "1/2", "-1/2", "3", "2/3", "1/16", "i", "-i"};

NumericForm standard(const NumericForm& cf) { return canonicalize(rebase_tail(cf)); }

}  // namespace

TEST(CharPolyTest, Examples) {
  EXPECT_EQ(char_poly(1).poly, ipoly({1, -1, -1}));
  EXPECT_EQ(char_poly(2).poly, ipoly({1, -2, -2, 1}));
  EXPECT_EQ(char_poly(3).poly, ipoly({1, -3, -6, 3, 1}));
  EXPECT_EQ(char_poly(4).poly.degree(), 5);
}

TEST(CharPolyTest, SingularWeights) {
  EXPECT_TRUE(is_singular(2, g("-1")));
  EXPECT_TRUE(is_singular(4, g("1")));
  EXPECT_FALSE(is_singular(1, g("1")));
  EXPECT_FALSE(is_singular(3, g("i")));
  EXPECT_EQ(char_poly(2).poly.eval(g("-1")), GaussianRational(0));
  EXPECT_EQ(char_poly(4).poly.eval(g("1")), GaussianRational(0));
}

TEST(CharPolyTest, AnnihilatesPowerSequence) {
  // sum_s c_s G_{j+s}^n = 0 is the identity the construction rests on.
  for (int n = 1; n <= 6; ++n) {
    const auto c = annihilator_weights(n);
    for (long j = -3; j <= 10; ++j) {
      Rational acc(0);
      for (std::size_t s = 0; s < c.size(); ++s) acc += Rational(c[s]) * pow(genfib(Seeds::lucas(), j + static_cast<long>(s)), n);
      EXPECT_TRUE(acc.is_zero()) << "n=" << n << " j=" << j;
    }
  }
}

TEST(AFunctionsTest, SymbolicBase) {
  const auto a = a_functions(1, 0, Symbolic{});
  EXPECT_EQ(a.values.at(0), RatFun(ipoly({1}), ipoly({1, -1, -1})));
  EXPECT_THROW(a_functions(2, 1, g("-1")), SingularWeight);
  EXPECT_THROW(a_functions(4, 0, g("1")), SingularWeight);
}

TEST(AFunctionsTest, RecursionMatchesRepeatedDerivative) {
  for (int n = 1; n <= 3; ++n) {
    const auto a = a_functions(n, 4, Symbolic{});
    RatFun expect(ipoly({1}), char_poly(n).poly);
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(a.values.at(static_cast<std::size_t>(m)), expect) << "n=" << n << " m=" << m;
      expect = apply_D(expect);
    }
  }
}

TEST(AFunctionsTest, NumericAgreesWithSymbolic) {
  for (int n = 1; n <= 3; ++n) {
    const auto sym = a_functions(n, 3, Symbolic{});
    for (const char* w : {"1/2", "2", "i", "-2/3"}) {
      const auto num = a_functions(n, 3, g(w));
      for (std::size_t m = 0; m <= 3; ++m) EXPECT_EQ(num.values[m], eval_at(sym.values[m], g(w)));
    }
  }
}

TEST(AFunctionsTest, SpecializedSequences) {
  const auto classic = classic_a(6);
  const auto bar = bar_a(6);
  EXPECT_EQ(classic[0], Rational(-1));
  EXPECT_EQ(classic[1], Rational(3));
  EXPECT_EQ(classic[2], Rational(-13));
  EXPECT_EQ(bar[0], Rational(1));
  EXPECT_EQ(bar[1], Rational(1));
  for (int m = 0; m <= 6; ++m) {
    const auto at_one = a_functions(1, m, g("1")).values;
    const auto at_minus_one = a_functions(1, m, g("-1")).values;
    EXPECT_EQ(at_one[static_cast<std::size_t>(m)], GaussianRational(classic[static_cast<std::size_t>(m)]));
    EXPECT_EQ(at_minus_one[static_cast<std::size_t>(m)], GaussianRational(bar[static_cast<std::size_t>(m)]));
  }
}

TEST(ClosedFormTest, UnitWeightLinearSum) {
  const auto cf = standard(closed_form(1, 1, g("1")));
  EXPECT_EQ(cf.head, heads({"1", "2"}));
  EXPECT_EQ(cf.tail[0].poly_k, ipoly({-1, 1}));
  EXPECT_EQ(cf.tail[1].poly_k, ipoly({-2, 1}));
}

TEST(ClosedFormTest, UnitWeightFifthPowers) {
  const auto cf = standard(closed_form(1, 5, g("1")));
  EXPECT_EQ(cf.head, heads({"2671", "4322"}));
  EXPECT_EQ(cf.tail[0].poly_k, ipoly({-2671, 1285, -310, 50, -5, 1}));
  EXPECT_EQ(cf.tail[1].poly_k, ipoly({-4322, 2080, -500, 80, -10, 1}));
}

TEST(ClosedFormTest, UnitWeightSquares) {
  const auto cf = canonicalize(closed_form(2, 0, g("1")));
  EXPECT_EQ(cf.head, heads({"3/2", "1/2", "-1/2"}));
  ASSERT_EQ(cf.tail.size(), 3u);
  EXPECT_EQ(cf.tail[0].poly_k, poly({"-3/2"}));
  EXPECT_EQ(cf.tail[1].poly_k, poly({"-1/2"}));
  EXPECT_EQ(cf.tail[2].poly_k, poly({"1/2"}));
}

TEST(ClosedFormTest, WeightTwoAndThree) {
  const auto two = standard(closed_form(1, 1, g("2")));
  EXPECT_EQ(two.head, heads({"0", "2/5"}));
  EXPECT_EQ(two.tail[0].w_exp_offset, 2);
  EXPECT_EQ(two.tail[0].poly_k, poly({"0", "1/5"}));
  EXPECT_EQ(two.tail[1].w_exp_offset, 1);
  EXPECT_EQ(two.tail[1].poly_k, poly({"-1/5", "1/5"}));

  const auto three = standard(closed_form(1, 1, g("3")));
  EXPECT_EQ(three.head, heads({"-9/121", "30/121"}));
  EXPECT_EQ(three.tail[0].poly_k, poly({"1/121", "11/121"}));
  EXPECT_EQ(three.tail[1].poly_k, poly({"-10/121", "11/121"}));
}

TEST(ClosedFormTest, SymbolicLinearWeightedSum) {
  const auto cf = canonicalize(rebase_tail(closed_form(1, 1, Symbolic{})));
  const QPoly base = ipoly({1, -1, -1});
  const RatFun sq(ipoly({1}), base * base);
  EXPECT_EQ(cf.head[0], RatFun(ipoly({2, -1}) * ipoly({0, 0, 1})) * sq);
  EXPECT_EQ(cf.head[1], RatFun(ipoly({1, 0, 1}) * ipoly({0, 1})) * sq);
  // Tail on w^{k+2} G_k times (1-w-w^2)^2 is k w^2 + (k+1) w - (k+2).
  const auto& tk = cf.tail[0].poly_k;
  ASSERT_EQ(tk.degree(), 1);
  EXPECT_EQ(tk[0] * RatFun(base * base), RatFun(ipoly({-2, 1})));
  EXPECT_EQ(tk[1] * RatFun(base * base), RatFun(ipoly({-1, 1, 1})));
}

TEST(ClosedFormTest, NegativeRThrows) { EXPECT_THROW(closed_form(1, -1, g("1")), std::invalid_argument); }

TEST(ClosedFormTest, SingularWeightsThrow) {
  EXPECT_THROW(closed_form(2, 0, g("-1")), SingularWeight);
  EXPECT_THROW(closed_form(4, 3, g("1")), SingularWeight);
  EXPECT_THROW(specialize(closed_form(2, 1, Symbolic{}), g("-1")), SingularWeight);
}

TEST(ClosedFormTest, SymbolicSpecializesToNumeric) {
  for (int n = 1; n <= 3; ++n) {
    const auto sym = closed_form(n, 2, Symbolic{});
    for (const char* w : {"1/2", "3", "i", "-2/3"}) {
      EXPECT_EQ(canonicalize(specialize(sym, g(w))), canonicalize(closed_form(n, 2, g(w)))) << n << " " << w;
    }
  }
}

TEST(RebaseTest, Examples) {
  const auto cf = closed_form(1, 0, g("1"));
  const auto std_form = standard(cf);
  EXPECT_EQ(std_form.head, heads({"0", "-1"}));
  EXPECT_EQ(std_form.tail[0].poly_k, ipoly({1}));
  EXPECT_EQ(std_form.tail[1].poly_k, ipoly({1}));
  EXPECT_EQ(rebase_tail(std_form), std_form);
  EXPECT_EQ(evaluate_closed(cf, 10, Seeds::fibonacci()), GaussianRational(143));
  EXPECT_EQ(evaluate_closed(std_form, 10, Seeds::fibonacci()), GaussianRational(143));
  EXPECT_THROW(rebase_tail(closed_form(2, 0, g("1"))), UnsupportedBasis);
}

TEST(RebaseTest, RoundTripIsIdentity) {
  for (const char* w : kWeights) {
    for (int r = 0; r <= 3; ++r) {
      const auto cf = canonicalize(closed_form(1, r, g(w)));
      EXPECT_EQ(canonicalize(to_shifted(rebase_tail(cf))), cf);
    }
  }
}

TEST(RebaseTest, ConstructionPathsAgree) {
  // Direct standard-basis construction against the general one after rebase.
  for (const char* w : kWeights) {
    for (int r = 0; r <= 4; ++r) {
      EXPECT_EQ(canonicalize(unit_power_closed_form(r, g(w))), standard(closed_form(1, r, g(w)))) << w << " r=" << r;
    }
  }
  for (int r = 0; r <= 3; ++r) {
    EXPECT_EQ(canonicalize(unit_power_closed_form(r, Symbolic{})), canonicalize(rebase_tail(closed_form(1, r, Symbolic{}))));
  }
}

TEST(EvaluateTest, Examples) {
  EXPECT_EQ(evaluate_closed(closed_form(1, 1, g("1")), 5, Seeds::fibonacci()), GaussianRational(46));
  EXPECT_EQ(evaluate_closed(closed_form(1, 1, g("-1")), 4, Seeds::fibonacci()), GaussianRational(7));
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= 3; ++r) {
      const auto cf = closed_form(n, r, g("2/3"));
      const Seeds s{Rational(3, 2), Rational(-1)};
      const GaussianRational expect = r == 0 ? GaussianRational(pow(s.g0, n)) : GaussianRational(0);
      EXPECT_EQ(evaluate_closed(cf, 0, s), expect);
    }
  }
}

TEST(EvaluateTest, AgreesWithBruteForceOnSmallGrid) {
  const std::vector<Seeds> seeds{Seeds::fibonacci(), Seeds::lucas(), {Rational(-1, 2), Rational(3)}, {Rational(4), Rational(0)}, {Rational(1), Rational(1)}};
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= 3; ++r) {
      for (const char* w : {"1", "-1/2", "i", "3"}) {
        if (is_singular(n, g(w))) continue;
        const auto cf = closed_form(n, r, g(w));
        for (const auto& s : seeds) {
          for (long k = 0; k <= 12; ++k) EXPECT_EQ(evaluate_closed(cf, k, s), brute_sum(n, r, g(w), k, s));
        }
      }
    }
  }
}

TEST(GeneratingTest, Examples) {
  EXPECT_EQ(generating_function(1, 1, g("1/2")).head, heads({"6", "10"}));
  EXPECT_EQ(generating_function(1, 0, g("1/2")).head, heads({"2", "2"}));
  EXPECT_EQ(generating_function(1, 2, g("1/2")).head, heads({"58", "94"}));
  EXPECT_EQ(canonicalize(generating_function(2, 0, g("1/16"))).head, heads({"3552/3553", "224/3553", "16/3553"}));
  EXPECT_TRUE(generating_function(2, 0, g("1/16")).tail.empty());
  EXPECT_FALSE(generating_function(1, 3, g("1/2")).meta.extension);
  EXPECT_TRUE(generating_function(2, 1, g("1/16")).meta.extension);
}

TEST(GeneratingTest, DivergentRefused) {
  EXPECT_THROW(generating_function(1, 0, g("2")), Divergent);
  EXPECT_THROW(generating_function(1, 0, g("2/3")), Divergent);
  EXPECT_NO_THROW(generating_function(1, 0, g("2/3"), true));
  EXPECT_THROW(generating_function(2, 0, g("-1"), true), SingularWeight);
}

TEST(GeneratingTest, SymbolicDenominators) {
  const auto sq = generating_function(2, 0, Symbolic{});
  const auto cube = generating_function(3, 0, Symbolic{});
  for (const auto& h : sq.head) EXPECT_EQ(h.den(), char_poly(2).poly.monic());
  for (const auto& h : cube.head) {
    if (!h.is_zero()) EXPECT_EQ(h.den(), char_poly(3).poly.monic());
  }
}

TEST(GeneratingTest, PartialSumsApproachLimit) {
  struct Case {
    int n;
    int r;
    const char* w;
  };
  for (const auto& c : {Case{1, 0, "1/2"}, Case{1, 1, "1/2"}, Case{1, 2, "1/2"}, Case{2, 0, "1/16"}, Case{1, 1, "1/3*i"},
                        Case{2, 1, "-1/16"}, Case{3, 0, "1/20"}}) {
    const auto gf = generating_function(c.n, c.r, g(c.w));
    const auto limit = evaluate_closed(gf, 0, Seeds::lucas());
    const auto e100 = (brute_sum(c.n, c.r, g(c.w), 100, Seeds::lucas()) - limit).norm();
    const auto e200 = (brute_sum(c.n, c.r, g(c.w), 200, Seeds::lucas()) - limit).norm();
    EXPECT_LT(e200, e100) << c.n << " " << c.r << " " << c.w;
    EXPECT_GT(e100, Rational(0));
  }
}

TEST(ConvergenceTest, Examples) {
  EXPECT_TRUE(converges(g("1/2"), 1));
  EXPECT_FALSE(converges(g("2"), 1));
  EXPECT_FALSE(converges(g("2/3"), 1));
  EXPECT_TRUE(converges(g("1/16"), 2));
  EXPECT_TRUE(converges(g("1/4"), 2));
  EXPECT_FALSE(converges(g("1/2"), 2));
  EXPECT_TRUE(converges(g("0"), 3));
  EXPECT_TRUE(converges(g("1/2*i"), 1));
}

TEST(ConvergenceTest, AgreesWithIntervalEvaluation) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 60);
  std::uniform_int_distribution<int> order(1, 4);
  for (int t = 0; t < 200; ++t) {
    const GaussianRational w(Rational(Integer(num(rng)), Integer(den(rng))), t % 3 == 0 ? Rational(Integer(num(rng)), Integer(den(rng))) : Rational(0));
    const int n = order(rng);
    EXPECT_EQ(converges(w, n), mpfr_check::interval_converges(w.norm(), n)) << w << " n=" << n;
  }
}
