#include <fibsum/adjudication.hpp>
#include <fibsum/oracle.hpp>

#include <gtest/gtest.h>

using namespace fibsum;

namespace {

struct Point {
  int n;
  int r;
  const char* w;
};

const Point kPoints[] = {{1, 0, "1"}, {2, 1, "1/2"}};
const std::vector<Seeds> kSeeds{Seeds::fibonacci(), Seeds::lucas(), {Rational(-1, 2), Rational(3)}};

bool matches_oracle(const Point& p, IdentityReading reading) {
  const auto w = GaussianRational::parse(p.w);
  for (const auto& s : kSeeds) {
    for (long k = 0; k <= 12; ++k) {
      if (!(literal_identity_terms(p.n, p.r, w, k, s, reading).total() == brute_sum(p.n, p.r, w, k, s))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(AdjudicationTest, PrintedBoundarySignDisagreesWithOracle) {
  for (const auto& p : kPoints) EXPECT_FALSE(matches_oracle(p, {BoundarySign::plus, CeilingReading::usual})) << p.n;
}

TEST(AdjudicationTest, NegatedBoundaryAgreesWithOracle) {
  for (const auto& p : kPoints) EXPECT_TRUE(matches_oracle(p, {BoundarySign::minus, CeilingReading::usual})) << p.n;
}

TEST(AdjudicationTest, StrictCeilingReadingFails) {
  for (const auto& p : kPoints) {
    EXPECT_FALSE(matches_oracle(p, {BoundarySign::minus, CeilingReading::strict})) << p.n;
    EXPECT_FALSE(matches_oracle(p, {BoundarySign::plus, CeilingReading::strict})) << p.n;
  }
}

TEST(AdjudicationTest, ConcreteCounterexample) {
  // Sum of F_0..F_3 is 4; the printed boundary sign yields a different value.
  const auto w = GaussianRational::parse("1");
  const auto printed = literal_identity_terms(1, 0, w, 3, Seeds::fibonacci(), {BoundarySign::plus, CeilingReading::usual});
  const auto fixed = literal_identity_terms(1, 0, w, 3, Seeds::fibonacci(), {BoundarySign::minus, CeilingReading::usual});
  EXPECT_EQ(brute_sum(1, 0, w, 3, Seeds::fibonacci()), GaussianRational(4));
  EXPECT_EQ(fixed.total(), GaussianRational(4));
  EXPECT_NE(printed.total(), GaussianRational(4));
  EXPECT_EQ(printed.first, fixed.first);
  EXPECT_EQ(printed.second, fixed.second);
  EXPECT_EQ(printed.third, fixed.third);
  EXPECT_EQ(printed.fourth, -fixed.fourth);
}
