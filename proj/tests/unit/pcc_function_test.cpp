#include <gtest/gtest.h>

#include <algorithm>

#include <birkhoff/constructions.hpp>
#include <birkhoff/errors.hpp>
#include <birkhoff/symbol_function.hpp>

#include "random_pcc.hpp"

namespace birkhoff {
namespace {

BinaryWord w(const char* s) { return BinaryWord::from_string(s); }

TEST(PccFunction, EvaluateExamples) {
  const PccFunction f = example23();
  EXPECT_EQ(f.evaluate(w("000")), -2.0);
  EXPECT_EQ(f.evaluate(w("110")), 3.0);
  EXPECT_EQ(example_indicator().evaluate(w("0111")), 0.0);
}

TEST(PccFunction, EvaluationIgnoresSymbolsBeyondDepth) {
  const PccFunction f = example23();
  EXPECT_EQ(f.evaluate(w("0011010")), f.evaluate(w("001")));
}

TEST(PccFunction, ShortWordIsAPreconditionViolation) {
  EXPECT_THROW(example23().evaluate(w("01")), PreconditionError);
  EXPECT_THROW(SymbolFunction(example23()).evaluate(w("0")), PreconditionError);
}

TEST(PccFunction, TableValidation) {
  EXPECT_THROW(PccFunction(2, {1.0, 2.0}), PreconditionError);
  EXPECT_THROW(PccFunction(0, {1.0}), PreconditionError);
  EXPECT_THROW(PccFunction(1, {1.0, std::numeric_limits<double>::infinity()}), PreconditionError);
}

TEST(PccFunction, IntegrateExamples) {
  EXPECT_EQ(example23().integrate(), 0.0);
  EXPECT_EQ(example_indicator().integrate(), 0.5);
  EXPECT_DOUBLE_EQ(lemma53(-1.0, 1.0, 3 + 3).integrate(), -1.0 + 2.0 / 64.0);
}

TEST(PccFunction, IntegrateSingleBumpTable) {
  // the same shape at L = 3: one b entry among eight
  const PccFunction f(3, {-1, -1, -1, -1, -1, -1, -1, 1});
  EXPECT_DOUBLE_EQ(integrate(SymbolFunction(f)), -0.75);
}

TEST(PccFunction, RefineExamples) {
  const PccFunction f = example23();
  EXPECT_EQ(f.refine(3), f);
  EXPECT_EQ(example_indicator().refine(2).values(), (std::vector<double>{0, 0, 1, 1}));
  EXPECT_THROW(f.refine(2), PreconditionError);
}

TEST(PccFunction, RefinePreservesIntegralAndValues) {
  testing::RandomPcc rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PccFunction f = rng.next_upto(4);
    for (std::size_t m = f.depth(); m <= f.depth() + 4; ++m) {
      const PccFunction g = f.refine(m);
      EXPECT_EQ(g.integrate(), f.integrate());
      for (std::uint64_t i = 0; i < g.size(); ++i) {
        const BinaryWord word = BinaryWord::from_index(i, m);
        EXPECT_EQ(g.evaluate(word), f.evaluate(word));
      }
    }
  }
}

TEST(PccFunction, ExtremesMatchTable) {
  testing::RandomPcc rng(12);
  const PccFunction f = rng.next(4);
  EXPECT_EQ(f.alpha_min(), *std::min_element(f.values().begin(), f.values().end()));
  EXPECT_EQ(f.alpha_max(), *std::max_element(f.values().begin(), f.values().end()));
  const PccFunction e = example23();
  EXPECT_EQ(e.alpha_min(), -3.0);
  EXPECT_EQ(e.alpha_max(), 3.0);
  EXPECT_EQ(e.sup_norm(), 3.0);
}

TEST(PccFunction, ArithmeticOnCommonRefinement) {
  const PccFunction s = example_indicator() + example23();
  EXPECT_EQ(s.depth(), 3U);
  EXPECT_EQ(s.evaluate(w("110")), 4.0);
  EXPECT_EQ(sup_distance(example23(), example23() + 0.25), 0.25);
  EXPECT_EQ((-example23()).evaluate(w("001")), 3.0);
}

TEST(SymbolFunction, ProceduralRuleAndTabulation) {
  const SymbolFunction f(2, [](BitSpan b) { return b[0] == b[1] ? 1.0 : 0.0; });
  EXPECT_EQ(f.evaluate(w("110")), 1.0);
  EXPECT_EQ(f.evaluate(w("100")), 0.0);
  EXPECT_EQ(f.tabulate().values(), (std::vector<double>{1, 0, 0, 1}));
  EXPECT_DOUBLE_EQ(integrate(f), 0.5);
  EXPECT_THROW(SymbolFunction(40, [](BitSpan) { return 0.0; }).tabulate(), PreconditionError);
}

}  // namespace
}  // namespace birkhoff
