#include <fibsum/oracle.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace fibsum;

namespace {

GaussianRational g(const char* s) { return GaussianRational::parse(s); }

// Textbook evaluation with Rational/Gaussian arithmetic, for brute_sum itself.
GaussianRational plain_sum(int n, int r, const GaussianRational& w, long k, const Seeds& s) {
  GaussianRational acc(0);
  for (long j = 0; j <= k; ++j) {
    acc += pow(w, j) * GaussianRational(pow(Rational(j), r) * pow(genfib(s, j), n));
  }
  return acc;
}

SweepConfig small_config() {
  SweepConfig c = SweepConfig::defaults();
  c.n_max = 2;
  c.r_max = 2;
  c.k_max = 8;
  return c;
}

}  // namespace

TEST(BruteSumTest, Examples) {
  EXPECT_EQ(brute_sum(1, 1, g("1"), 5, Seeds::fibonacci()), GaussianRational(46));
  EXPECT_EQ(brute_sum(1, 0, g("1"), 10, Seeds::fibonacci()), GaussianRational(143));
  for (int n = 0; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(brute_sum(n, r, g("-2/3+i"), 0, Seeds::lucas()), GaussianRational(0));
  }
  EXPECT_EQ(brute_sum(2, 0, g("0"), 7, Seeds::lucas()), GaussianRational(4));
  EXPECT_THROW(brute_sum(1, 0, g("1"), -1, Seeds::lucas()), std::invalid_argument);
}

TEST(BruteSumTest, IntegerHornerMatchesPlainArithmetic) {
  const std::vector<Seeds> seeds{Seeds::fibonacci(), {Rational(1, 3), Rational(-5, 2)}};
  for (const char* w : {"1/2", "-3/4+2/5*i", "i", "7", "0"}) {
    for (int n = 0; n <= 3; ++n) {
      for (int r = 0; r <= 2; ++r) {
        for (const auto& s : seeds) {
          for (long k = 0; k <= 9; ++k) EXPECT_EQ(brute_sum(n, r, g(w), k, s), plain_sum(n, r, g(w), k, s));
        }
      }
    }
  }
}

TEST(KnuthResidualTest, Examples) {
  for (long j = -5; j <= 10; ++j) EXPECT_TRUE(knuth_identity_residual(1, j, Seeds{Rational(3, 7), Rational(-2)}).is_zero());
  EXPECT_TRUE(knuth_identity_residual(2, 1, Seeds::fibonacci()).is_zero());
  EXPECT_TRUE(knuth_identity_residual(3, 0, Seeds::fibonacci()).is_zero());
}

TEST(KnuthResidualTest, VanishesIncludingNegativeIndices) {
  const std::vector<Seeds> seeds{Seeds::fibonacci(), Seeds::lucas(), {Rational(-1, 2), Rational(3)}, {Rational(7), Rational(-4)},
                                 {Rational(2, 9), Rational(5, 11)}};
  for (int n = 1; n <= 6; ++n) {
    for (long j = -5; j <= 20; ++j) {
      for (const auto& s : seeds) EXPECT_TRUE(knuth_identity_residual(n, j, s).is_zero()) << n << " " << j;
    }
  }
}

TEST(SweepTest, SeedGridCoversDegreeBound) {
  const auto c = SweepConfig::defaults();
  const auto seeds = sweep_seeds(c);
  for (int a = 0; a <= c.n_max; ++a) {
    for (int b = 0; b <= c.n_max; ++b) {
      EXPECT_NE(std::find(seeds.begin(), seeds.end(), Seeds{Rational(a), Rational(b)}), seeds.end());
    }
  }
  EXPECT_NE(std::find(seeds.begin(), seeds.end(), Seeds::lucas()), seeds.end());
  // (2, 1) already lies in the grid for n_max >= 2.
  EXPECT_EQ(seeds.size(), static_cast<std::size_t>((c.n_max + 1) * (c.n_max + 1) + c.trials));

  SweepConfig tiny = c;
  tiny.n_max = 1;
  const auto few = sweep_seeds(tiny);
  EXPECT_EQ(few.size(), static_cast<std::size_t>(4 + 1 + tiny.trials));
  EXPECT_NE(std::find(few.begin(), few.end(), Seeds::lucas()), few.end());
  EXPECT_EQ(sweep_seeds(c), seeds);
}

TEST(SweepTest, SmallSweepPassesAndSkipsSingularSlice) {
  const auto report = run_sweep(small_config());
  EXPECT_EQ(report.failed(), 0u);
  EXPECT_GT(report.passed(), 0u);
  std::set<std::string> skipped;
  for (const auto& c : report.cases) {
    if (c.status == CaseStatus::skipped_singular) skipped.insert(std::to_string(c.n) + ":" + c.w.str());
  }
  EXPECT_EQ(skipped, (std::set<std::string>{"2:-1"}));
}

TEST(SweepTest, CorruptedFormIsCaught) {
  SweepConfig c = small_config();
  c.w_grid = {g("1/2")};
  const auto report = run_sweep(c, [](int n, int r, const GaussianRational& w) {
    auto cf = closed_form(n, r, w);
    if (n == 2 && r == 1) cf.head[1] += GaussianRational(Rational(1, 1000));
    return cf;
  });
  std::size_t fails = 0;
  for (const auto& cs : report.cases) {
    if (cs.status != CaseStatus::fail) continue;
    ++fails;
    EXPECT_EQ(cs.n, 2);
    EXPECT_EQ(cs.r, 1);
    ASSERT_TRUE(cs.counterexample.has_value());
    EXPECT_NE(cs.counterexample->closed, cs.counterexample->brute);
    EXPECT_EQ(cs.counterexample->brute, brute_sum(2, 1, g("1/2"), cs.k, cs.counterexample->seeds));
  }
  EXPECT_EQ(fails, static_cast<std::size_t>(c.k_max + 1));
}

TEST(SweepTest, DeterministicAndOrderIndependent) {
  SweepConfig a = small_config();
  SweepConfig b = a;
  std::reverse(b.w_grid.begin(), b.w_grid.end());
  const auto ra = run_sweep(a);
  EXPECT_EQ(run_sweep(a), ra);
  EXPECT_EQ(run_sweep(b), ra);
}
