#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <birkhoff/constructions.hpp>
#include <birkhoff/debruijn.hpp>
#include <birkhoff/errors.hpp>
#include <birkhoff/oracle.hpp>
#include <birkhoff/thermo.hpp>

#include "random_pcc.hpp"

namespace birkhoff {
namespace {

TEST(CycleOracle, IndicatorOrbits) {
  const auto cycles = enumerate_cycle_means(example_indicator(), 2);
  std::set<double> means;
  for (const auto& [p, m] : cycles) means.insert(m);
  EXPECT_EQ(cycles.size(), 3U);
  EXPECT_EQ(means, (std::set<double>{0.0, 0.5, 1.0}));
}

TEST(CycleOracle, DepthThreeExample) {
  const auto cycles = enumerate_cycle_means(example23(), 8);
  const auto [lo, hi] = std::minmax_element(cycles.begin(), cycles.end(),
                                            [](const auto& a, const auto& b) { return a.second < b.second; });
  EXPECT_EQ(lo->second, -2.0);
  EXPECT_EQ(hi->second, 2.0);
  for (const auto& [p, m] : cycles) EXPECT_EQ(p, p.canonical());
}

TEST(CycleOracle, AgreesWithKarp) {
  testing::RandomPcc rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const PccFunction f = rng.next_upto(4);
    const auto cycles = enumerate_cycle_means(f, f.size());
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& [p, m] : cycles) {
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    const auto [elo, ehi] = endpoints(f);
    EXPECT_NEAR(lo, elo, 1e-12);
    EXPECT_NEAR(hi, ehi, 1e-12);
  }
}

TEST(CycleOracle, Caps) {
  EXPECT_THROW(enumerate_cycle_means(PccFunction::constant(0.0, 5), 4), PreconditionError);
  EXPECT_THROW(enumerate_cycle_means(example_indicator(), 3), PreconditionError);
}

TEST(Counting, IndicatorCentralMass) {
  // |k/20 - 1/2| <= 0.05 for k = 9, 10, 11
  EXPECT_EQ(counting_words(example_indicator(), 0.5, 0.05, 20), 167960U + 184756U + 167960U);
  EXPECT_NEAR(counting_lambda(example_indicator(), 0.5, 0.05, 20), std::log2(520676.0) / 20.0, 1e-14);
  EXPECT_EQ(counting_words(example_indicator(), 1.0, 0.0, 12), 1U);
  EXPECT_EQ(counting_lambda(example_indicator(), 1.0, 0.0, 12), 0.0);
  EXPECT_EQ(counting_lambda(example_indicator(), 2.0, 0.1, 12), -INFINITY);
}

TEST(Counting, MonotoneInDelta) {
  testing::RandomPcc rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const PccFunction f = rng.next_upto(2);
    const double a = f.integrate();
    double prev = -INFINITY;
    for (double d : {0.0, 0.01, 0.05, 0.1, 0.3}) {
      const double v = counting_lambda(f, a, d, 14);
      EXPECT_GE(v, prev);
      prev = v;
    }
    // every word qualifies: 2^{N+D-1} of them
    EXPECT_NEAR(counting_lambda(f, a, 10.0, 14), (14.0 + f.depth() - 1) / 14.0, 1e-14);
  }
}

TEST(Counting, ApproachesTheSpectrumFromBelow) {
  // finite-N counts underestimate S by O(log N / N); the gap shrinks with N
  testing::RandomPcc rng(63);
  for (int trial = 0; trial < 5; ++trial) {
    const PccFunction f = rng.next(1);
    const double a = f.integrate();
    const double small = counting_lambda(f, a, 0.03, 12);
    const double large = counting_lambda(f, a, 0.03, 22);
    EXPECT_LE(large, 1.0);
    EXPECT_GE(large, 0.8);
    EXPECT_GE(large + 1e-12, small - 0.05);
  }
}

TEST(Counting, Cap) { EXPECT_THROW(counting_lambda(example23(), 0.0, 0.1, 23), PreconditionError); }

TEST(Cover, AdmissiblePairs) {
  for (std::size_t l : {6U, 9U, 12U}) {
    for (std::size_t n = 1; n + l - 1 <= 24; ++n) {
      if ((n + l - 1) % l != 0) continue;
      const CoverReport r = lemma53_cover_check(-1.0, 1.0, l, 0.25, n);
      EXPECT_TRUE(r.pass) << "L=" << l << " N=" << n;
      EXPECT_LE(static_cast<double>(r.exact_count), r.bound);
    }
  }
}

TEST(Cover, ThresholdAndDegenerateCase) {
  const CoverReport r = lemma53_cover_check(-1.0, 1.0, 6, 0.25, 7, 0.1);
  EXPECT_NEAR(r.threshold, 0.3 * -1.0 + 0.7 * 1.0, 1e-15);
  const CoverReport all = lemma53_cover_check(-1.0, 1.0, 6, 1.0, 7);
  EXPECT_EQ(all.exact_count, std::uint64_t{1} << 12);
  EXPECT_TRUE(all.pass);
}

TEST(Cover, ExponentialTermAloneIsTooSmall) {
  // without the polynomial prefactor the bound no longer covers the count
  const CoverReport r = lemma53_cover_check(-1.0, 1.0, 6, 0.25, 19);
  EXPECT_EQ(r.exact_count, 48U);
  EXPECT_GT(static_cast<double>(r.exact_count), std::exp2(0.25 * 19));
}

TEST(Cover, Preconditions) {
  EXPECT_THROW(lemma53_cover_check(-1.0, 1.0, 6, 0.25, 8), PreconditionError);
  EXPECT_THROW(lemma53_cover_check(-1.0, 1.0, 5, 0.25, 6), PreconditionError);
  EXPECT_THROW(lemma53_cover_check(-1.0, 1.0, 6, 0.25, 25), PreconditionError);
}

TEST(UniformN0, DepthThreeExample) {
  EXPECT_EQ(uniform_N0(example23(), 1.0), 33U);
  const N0Report r = uniform_N0_check(example23(), 1.0);
  EXPECT_EQ(r.n0, 33U);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.worst_excess, 0.0);
}

TEST(UniformN0, MonotoneInEps) {
  std::uint64_t prev = ~std::uint64_t{0};
  for (double eps : {0.25, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    const std::uint64_t n0 = uniform_N0(example23(), eps);
    EXPECT_LE(n0, prev);
    prev = n0;
  }
  EXPECT_LE(prev, 3U * example23().depth());
}

TEST(UniformN0, ConstantFunction) {
  const N0Report r = uniform_N0_check(PccFunction::constant(0.5, 2), 0.1, 50);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.worst_excess, -0.1, 1e-12);
}

TEST(Trajectory, Examples) {
  const auto c = sample_trajectory(PccFunction::constant(0.25, 3), 7, 100);
  ASSERT_EQ(c.size(), 100U);
  for (double v : c) EXPECT_EQ(v, 0.25);
  for (std::uint64_t seed : {1U, 2U, 3U}) {
    EXPECT_NEAR(sample_trajectory(example_indicator(), seed, 100000).back(), 0.5, 0.01);
    EXPECT_NEAR(sample_trajectory(example23(), seed, 100000).back(), 0.0, 0.05);
  }
}

TEST(Trajectory, Reproducible) {
  EXPECT_EQ(sample_trajectory(example23(), 99, 1000), sample_trajectory(example23(), 99, 1000));
  EXPECT_NE(sample_trajectory(example23(), 99, 1000), sample_trajectory(example23(), 100, 1000));
  EXPECT_EQ(random_word(5, 200).prefix(64), random_word(5, 64));
}

TEST(Trajectory, MatchesTheWordStream) {
  const BinaryWord w = random_word(11, 50);
  const auto avg = sample_trajectory(example_indicator(), 11, 50);
  double ones = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    ones += w[i];
    EXPECT_NEAR(avg[i], ones / static_cast<double>(i + 1), 1e-15);
  }
}

}  // namespace
}  // namespace birkhoff
