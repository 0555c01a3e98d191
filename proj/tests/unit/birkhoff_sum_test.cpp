#include <gtest/gtest.h>

#include <birkhoff/birkhoff_sum.hpp>
#include <birkhoff/constructions.hpp>
#include <birkhoff/errors.hpp>

#include "random_pcc.hpp"

namespace birkhoff {
namespace {

BinaryWord w(const char* s) { return BinaryWord::from_string(s); }
PeriodicPoint p(const char* s) { return PeriodicPoint(w(s)); }

TEST(FiniteAverage, Examples) {
  const PccFunction ind = example_indicator();
  EXPECT_EQ(finite_birkhoff_average(ind, w("1111"), 3), 1.0);
  EXPECT_EQ(finite_birkhoff_average(ind, w("10101"), 4), 0.5);
}

TEST(FiniteAverage, DepthThreeRepeatedPattern) {
  // windows of (001)^3: 001, 010, 100, 001, 010, 100
  const double expected = (-3.0 - 2.0 - 1.0 - 3.0 - 2.0 - 1.0) / 6.0;
  EXPECT_DOUBLE_EQ(finite_birkhoff_average(example23(), w("001001001"), 6), expected);
}

TEST(FiniteAverage, ShortPrefixIsRejected) {
  EXPECT_THROW(finite_birkhoff_average(example23(), w("0010"), 3), PreconditionError);
}

TEST(PeriodicAverage, Examples) {
  const PccFunction ind = example_indicator();
  EXPECT_EQ(periodic_birkhoff_average(ind, p("1")), 1.0);
  EXPECT_EQ(periodic_birkhoff_average(ind, p("10")), 0.5);
  EXPECT_EQ(periodic_birkhoff_average(example23(), p("0")), -2.0);
}

TEST(PeriodicAverage, MatchesLongFiniteAverages) {
  testing::RandomPcc rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const PccFunction f = rng.next_upto(4);
    const std::size_t len = 1 + rng.engine()() % 6;
    const PeriodicPoint pt(BinaryWord::from_index(rng.engine()() % (1U << len), len));
    const std::size_t n = 1000 * len;
    const double finite = finite_birkhoff_average(f, pt.unroll(n + f.depth() - 1), n);
    EXPECT_NEAR(periodic_birkhoff_average(f, pt), finite, 1e-12);
  }
}

}  // namespace
}  // namespace birkhoff
