// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexopt/harness.h"

#include <gtest/gtest.h>

#include <vector>

#include "lexopt/error.h"
#include "oracles.h"

namespace lexopt {
namespace {

GeneratorParams Params(InstanceKind kind, std::uint64_t seed) {
  GeneratorParams p;
  p.kind = kind;
  p.seed = seed;
  return p;
}

TEST(TightnessTest, RatioIsHalfAlpha) {
  for (const Rational x : {Rational(11, 10), Rational(5, 4), Rational(3, 2),
                           Rational(7, 4), Rational(2)}) {
    const VerificationReport r = VerifyBound(TightnessExample(x));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.regime, Regime::kBound);
    EXPECT_EQ(r.alpha, Alpha::Finite(x));
    EXPECT_EQ(r.opt, 2);
    EXPECT_EQ(r.lexopt, x);
    EXPECT_EQ(r.ratio, x / 2);
    EXPECT_EQ(r.bound, r.lexopt);
  }
}

TEST(TightnessTest, ViceVersaFailsAtTwo) {
  const VerificationReport r = VerifyBound(TightnessExample(2));
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.vice_versa_checked);
  EXPECT_EQ(r.max_weight_optima, 2);
  EXPECT_EQ(r.vice_versa_holds, false);
  EXPECT_EQ(r.non_lex_maximal_optimum, (ElementSet{0, 2}));
  EXPECT_EQ(r.lexopt_solution, (ElementSet{1}));
  EXPECT_FALSE(r.notes.empty());
}

TEST(TightnessTest, RejectsOutOfRange) {
  for (const Rational x : {Rational(1), Rational(9, 4), Rational(1, 2)}) {
    try {
      TightnessExample(x);
      FAIL();
    } catch (const LexoptError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
    }
  }
}

TEST(VerifyTest, SingleClassIsEquivalence) {
  Instance inst;
  inst.problem = WeightedGraph(3, {{0, 1, 4}, {1, 2, 4}});
  const VerificationReport r = VerifyBound(inst);
  EXPECT_EQ(r.regime, Regime::kEquivalence);
  EXPECT_FALSE(r.alpha.is_finite());
  EXPECT_EQ(r.lexopt, r.opt);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.vice_versa_holds, true);
}

TEST(GeneratorTest, Deterministic) {
  for (InstanceKind kind :
       {InstanceKind::kMatching, InstanceKind::kIntersection}) {
    const Instance a = GenerateInstance(Params(kind, 42));
    const Instance b = GenerateInstance(Params(kind, 42));
    EXPECT_EQ(a.weights(), b.weights());
    EXPECT_EQ(a.metadata, b.metadata);
    EXPECT_EQ(VerifyBound(a), VerifyBound(b));
  }
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_EQ(DeriveSeed(9, 4), DeriveSeed(9, 4));
}

TEST(GeneratorTest, ExactAlphaTwo) {
  GeneratorParams p = Params(InstanceKind::kMatching, 1);
  p.k_min = p.k_max = 2;
  p.alpha_min = 2;
  p.alpha_max = Rational(2);
  const Instance inst = GenerateInstance(p);
  const WeightClasses c = ComputeWeightClasses(inst.weights());
  EXPECT_EQ(c.k(), 2);
  EXPECT_EQ(c.levels[0], 2 * c.levels[1]);
}

TEST(GeneratorTest, AlphaInRangeAndValid) {
  for (InstanceKind kind :
       {InstanceKind::kMatching, InstanceKind::kIntersection}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GeneratorParams p = Params(kind, DeriveSeed(5, seed));
      p.alpha_min = Rational(5, 4);
      p.alpha_max = Rational(7, 4);
      const Instance inst = GenerateInstance(p);
      ValidateInstance(inst);
      const WeightClasses c = ComputeWeightClasses(inst.weights());
      ASSERT_GE(c.k(), p.k_min);
      ASSERT_LE(c.k(), p.k_max);
      const Alpha a = ComputeAlpha(c);
      ASSERT_TRUE(a.is_finite());
      ASSERT_GE(a.value(), p.alpha_min);
      ASSERT_LE(a.value(), *p.alpha_max);
      if (kind == InstanceKind::kIntersection) {
        const auto& pair = std::get<MatroidPair>(inst.problem);
        ASSERT_LE(inst.ground_size(), p.max_ground);
        ASSERT_TRUE(VerifyMatroidAxioms(*pair.first).passed);
        ASSERT_TRUE(VerifyMatroidAxioms(*pair.second).passed);
      } else {
        const auto& g = std::get<WeightedGraph>(inst.problem);
        ASSERT_LE(g.vertex_count(), p.max_vertices);
        ASSERT_LE(g.edge_count(), p.max_edges);
      }
    }
  }
}

TEST(GeneratorTest, UnboundedAlpha) {
  GeneratorParams p = Params(InstanceKind::kIntersection, 3);
  p.alpha_min = Rational(21, 10);
  p.alpha_max.reset();
  for (int i = 0; i < 30; ++i) {
    p.seed = DeriveSeed(3, i);
    EXPECT_TRUE(
        ComputeAlpha(ComputeWeightClasses(GenerateInstance(p).weights()))
            .ExceedsTwo());
  }
}

TEST(GeneratorTest, InfeasibleParams) {
  GeneratorParams p;
  p.alpha_min = 3;
  p.alpha_max = Rational(2);
  EXPECT_THROW(GenerateInstance(p), LexoptError);
  p = GeneratorParams();
  p.k_min = 4;
  p.k_max = 2;
  EXPECT_THROW(GenerateInstance(p), LexoptError);
  p = GeneratorParams();
  p.alpha_min = 1;
  try {
    GenerateInstance(p);
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGenerationError);
  }
}

TEST(VerifyTest, RandomInstancesPass) {
  for (InstanceKind kind :
       {InstanceKind::kMatching, InstanceKind::kIntersection}) {
    for (std::uint64_t i = 0; i < 120; ++i) {
      GeneratorParams p = Params(kind, DeriveSeed(77, i));
      if (i % 2) {
        p.alpha_min = Rational(21, 10);
        p.alpha_max = Rational(4);
      }
      const VerificationReport r = VerifyBound(GenerateInstance(p));
      ASSERT_TRUE(r.passed) << i;
      ASSERT_TRUE(r.oracle_checked);
      if (r.regime == Regime::kEquivalence) {
        ASSERT_EQ(r.lexopt, r.opt);
        ASSERT_EQ(r.vice_versa_holds, true);
      } else {
        ASSERT_GE(r.lexopt, *r.bound);
      }
    }
  }
}

TEST(ChainTest, TightnessOneStep) {
  const ChainReport r = EligibleChain(TightnessExample(2), ElementSet{0, 2});
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].after, (ElementSet{1}));
  EXPECT_EQ(r.steps[0].weight_before, 2);
  EXPECT_EQ(r.steps[0].weight_after, 2);
  EXPECT_TRUE(r.steps[0].eligible);
  EXPECT_TRUE(r.steps[0].step_bound);
  EXPECT_TRUE(r.passed);
}

TEST(ChainTest, LexMaximalStartIsEmpty) {
  const ChainReport r = EligibleChain(TightnessExample(2), ElementSet{1});
  EXPECT_TRUE(r.steps.empty());
  EXPECT_TRUE(r.passed);
}

TEST(ChainTest, InfeasibleStart) {
  try {
    EligibleChain(TightnessExample(2), ElementSet{0, 1});
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSolution);
  }
}

TEST(ChainTest, RandomChainsPass) {
  int steps = 0;
  for (InstanceKind kind :
       {InstanceKind::kMatching, InstanceKind::kIntersection}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const Instance inst = GenerateInstance(Params(kind, DeriveSeed(88, i)));
      for (const auto& start : {std::optional<ElementSet>(),
                                std::optional<ElementSet>(ElementSet{})}) {
        const ChainReport r = EligibleChain(inst, start);
        ASSERT_TRUE(r.passed) << i;
        ASSERT_TRUE(r.indices_nondecreasing);
        ASSERT_TRUE(r.step_counts_within_bound);
        ASSERT_TRUE(r.terminal_lex_maximal);
        ASSERT_TRUE(r.terminal_weight_is_lexopt);
        ASSERT_TRUE(r.telescoped_bound);
        for (const ChainStep& step : r.steps) {
          ASSERT_TRUE(step.eligible);
          ASSERT_TRUE(step.step_bound);
        }
        steps += static_cast<int>(r.steps.size());
      }
    }
  }
  EXPECT_GT(steps, 300);
}

TEST(GreedyTest, TightnessAndHalfBound) {
  const GreedyReport t = GreedyBaseline(TightnessExample(Rational(3, 2)));
  EXPECT_EQ(t.solution, (ElementSet{1}));
  EXPECT_EQ(t.weight, Rational(3, 2));
  EXPECT_EQ(t.ratio, Rational(3, 4));
  for (InstanceKind kind :
       {InstanceKind::kMatching, InstanceKind::kIntersection}) {
    for (std::uint64_t i = 0; i < 150; ++i) {
      const GreedyReport g = GreedyBaseline(GenerateInstance(Params(kind, i)));
      ASSERT_GE(2 * g.weight, g.opt);
    }
  }
}

TEST(SweepTest, EmptyConfig) {
  const SweepReport r = Sweep(SweepConfig{});
  EXPECT_EQ(r.total, 0);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.instances.empty());
}

TEST(SweepTest, BucketsAndTightness) {
  SweepConfig config;
  SweepBatch low;
  low.params = Params(InstanceKind::kMatching, 1);
  low.count = 40;
  SweepBatch high;
  high.params = Params(InstanceKind::kIntersection, 2);
  high.params.alpha_min = 3;
  high.params.alpha_max.reset();
  high.count = 40;
  config.batches = {low, high};
  config.tightness = {Rational(3, 2), 2};
  const SweepReport r = Sweep(config);
  EXPECT_EQ(r.total, 82);
  EXPECT_TRUE(r.all_passed());
  int tight = 0;
  for (const InstanceSummary& s : r.instances) {
    if (s.source.rfind("tightness", 0) == 0) {
      EXPECT_EQ(s.ratio, s.alpha.value() / 2);
      ++tight;
    }
  }
  EXPECT_EQ(tight, 2);
  for (const BucketStats& b : r.buckets) {
    if (b.label == "(2,inf)" || b.label == "inf") {
      EXPECT_EQ(b.lexopt_equals_opt, b.instances);
    } else if (b.min_ratio_over_bound) {
      EXPECT_GE(*b.min_ratio_over_bound, 1);
    }
  }
}

TEST(SweepTest, AlphaBuckets) {
  EXPECT_EQ(AlphaBucket(Alpha::Finite(Rational(5, 4))), "(1,5/4]");
  EXPECT_EQ(AlphaBucket(Alpha::Finite(Rational(13, 10))), "(5/4,3/2]");
  EXPECT_EQ(AlphaBucket(Alpha::Finite(2)), "(7/4,2]");
  EXPECT_EQ(AlphaBucket(Alpha::Finite(Rational(201, 100))), "(2,inf)");
  EXPECT_EQ(AlphaBucket(Alpha::Infinite()), "inf");
}

}  // namespace
}  // namespace lexopt
