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

#include "lexopt/intersection.h"

#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <vector>

#include "lexopt/error.h"
#include "oracles.h"
#include "random_util.h"

namespace lexopt {
namespace {

using Arc = std::pair<Element, Element>;

WeightedGraph Tightness(const Rational& x) {
  return WeightedGraph(4, {{0, 2, 1}, {1, 2, x}, {1, 3, 1}});
}

struct Pair {
  MatroidPtr m1;
  MatroidPtr m2;
  std::vector<Rational> w;
};

Pair TightnessPair(const Rational& x) {
  const WeightedGraph g = Tightness(x);
  auto [m1, m2] = BipartiteMatroids(g, {0, 1});
  return {m1, m2, g.Weights()};
}

// a:10, b:1, c:1 with blocks {a,b},{c} and {a,c},{b}.
Pair Triangle() {
  auto m1 = std::make_shared<PartitionMatroid>(
      3, std::vector<ElementSet>{{0, 1}, {2}}, std::vector<int>{1, 1});
  auto m2 = std::make_shared<PartitionMatroid>(
      3, std::vector<ElementSet>{{0, 2}, {1}}, std::vector<int>{1, 1});
  return {m1, m2, {10, 1, 1}};
}

Pair RandomPair(std::mt19937_64& rng, int max_ground, int levels) {
  const int n = testing::Draw(rng, 1, max_ground);
  return {testing::RandomMatroid(rng, n), testing::RandomMatroid(rng, n),
          testing::RandomWeights(rng, n, levels)};
}

TEST(ExchangeGraphTest, EmptySet) {
  const Pair p = Triangle();
  const ExchangeabilityGraph g =
      BuildExchangeabilityGraph(*p.m1, *p.m2, {}, p.w);
  EXPECT_TRUE(g.arcs_into_inside.empty());
  EXPECT_TRUE(g.arcs_into_outside.empty());
  EXPECT_EQ(g.sources, (ElementSet{0, 1, 2}));
  EXPECT_EQ(g.sinks, (ElementSet{0, 1, 2}));
  EXPECT_EQ(g.cost, (std::vector<Rational>{-10, -1, -1}));
}

TEST(ExchangeGraphTest, TightnessBipartiteEncoding) {
  const Pair p = TightnessPair(Rational(3, 2));
  const ExchangeabilityGraph g =
      BuildExchangeabilityGraph(*p.m1, *p.m2, {0}, p.w);
  EXPECT_EQ(g.sources, (ElementSet{1, 2}));
  EXPECT_EQ(g.sinks, (ElementSet{2}));
  EXPECT_EQ(g.arcs_into_outside, (std::vector<Arc>{{0, 1}, {0, 2}}));
  EXPECT_EQ(g.arcs_into_inside, (std::vector<Arc>{{1, 0}, {2, 0}}));
  EXPECT_EQ(g.cost, (std::vector<Rational>{1, Rational(-3, 2), -1}));
}

TEST(ExchangeGraphTest, RankOneExchange) {
  auto m = std::make_shared<UniformMatroid>(2, 1);
  const std::vector<Rational> w = {1, 1};
  const ExchangeabilityGraph g = BuildExchangeabilityGraph(*m, *m, {0}, w);
  EXPECT_EQ(g.arcs_into_outside, (std::vector<Arc>{{0, 1}}));
  EXPECT_EQ(g.arcs_into_inside, (std::vector<Arc>{{1, 0}}));
  EXPECT_TRUE(g.sources.empty());
  EXPECT_TRUE(g.sinks.empty());
}

TEST(ExchangeGraphTest, RejectsDependentSet) {
  const Pair p = Triangle();
  try {
    BuildExchangeabilityGraph(*p.m1, *p.m2, {0, 1}, p.w);
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSolution);
  }
}

// Arcs and terminals recomputed straight from the definitions.
TEST(ExchangeGraphTest, AgreesWithDefinitions) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 150; ++trial) {
    const Pair p = RandomPair(rng, 7, 4);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    const ElementSet& in = family[rng() % family.size()];
    const ExchangeabilityGraph g =
        BuildExchangeabilityGraph(*p.m1, *p.m2, in, p.w);
    std::vector<Arc> a1, a2;
    ElementSet s, t;
    const int n = p.m1->ground_size();
    for (Element x = 0; x < n; ++x) {
      if (SetContains(in, x)) continue;
      const ElementSet plus = SetUnion(in, {x});
      if (p.m1->IsIndependent(plus)) s.push_back(x);
      if (p.m2->IsIndependent(plus)) t.push_back(x);
      for (Element y : in) {
        const ElementSet swap = SetDifference(plus, {y});
        if (p.m1->IsIndependent(swap)) a1.push_back({y, x});
        if (p.m2->IsIndependent(swap)) a2.push_back({x, y});
      }
    }
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    auto got1 = g.arcs_into_outside;
    auto got2 = g.arcs_into_inside;
    std::sort(got1.begin(), got1.end());
    std::sort(got2.begin(), got2.end());
    ASSERT_EQ(got1, a1);
    ASSERT_EQ(got2, a2);
    ASSERT_EQ(g.sources, s);
    ASSERT_EQ(g.sinks, t);
  }
}

TEST(PathTest, SingleVertexInBothTerminals) {
  const Pair p = Triangle();
  const ExchangeabilityGraph g =
      BuildExchangeabilityGraph(*p.m1, *p.m2, {}, p.w);
  EXPECT_EQ(ShortestCheapestPath(g), (ExchangePath{0}));
}

TEST(PathTest, NoPath) {
  const Pair p = Triangle();
  const ExchangeabilityGraph g =
      BuildExchangeabilityGraph(*p.m1, *p.m2, {1, 2}, p.w);
  EXPECT_EQ(ShortestCheapestPath(g), std::nullopt);
}

TEST(PathTest, NegativeCycleIsReported) {
  // {b} is not 1-extreme for a:10/b:1 under U(1) twice.
  auto m = std::make_shared<UniformMatroid>(2, 1);
  auto free = std::make_shared<UniformMatroid>(2, 2);
  const std::vector<Rational> w = {10, 1};
  ExchangeabilityGraph g = BuildExchangeabilityGraph(*m, *m, {1}, w);
  EXPECT_EQ(ShortestCheapestPath(g), std::nullopt);
  // A source that enters the cycle 1 -> 0 -> 1 of negative cost.
  g = BuildExchangeabilityGraph(*m, *free, {1}, w);
  g.sources = {0};
  g.sinks = {};
  try {
    ShortestCheapestPath(g);
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotExtremeInput);
  }
}

// Augmenting from empty keeps every intermediate set extreme; path costs
// match the cheapest simple path and no inner vertex is a terminal.
TEST(AugmentTest, ExtremalityChainAgainstEnumeration) {
  std::mt19937_64 rng(9);
  int augmentations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Pair p = RandomPair(rng, 8, 4);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    ElementSet current;
    while (true) {
      const ExchangeabilityGraph g =
          BuildExchangeabilityGraph(*p.m1, *p.m2, current, p.w);
      const auto path = ShortestCheapestPath(g);
      const auto simple = testing::CheapestSimplePathCost(g);
      ASSERT_EQ(path.has_value(), simple.has_value());
      if (!path) {
        EXPECT_THROW(AugmentExtreme(*p.m1, *p.m2, p.w, current), LexoptError);
        EXPECT_FALSE(testing::MaxWeightOfSize(family, p.w, current.size() + 1));
        break;
      }
      Rational cost = 0;
      for (Element v : *path) cost += g.cost[v];
      ASSERT_EQ(cost, *simple);
      for (size_t j = 1; j + 1 < path->size(); ++j) {
        ASSERT_FALSE(SetContains(g.sources, (*path)[j]));
        ASSERT_FALSE(SetContains(g.sinks, (*path)[j]));
      }
      const Augmentation next = AugmentExtreme(*p.m1, *p.m2, p.w, current);
      ASSERT_EQ(next.path, *path);
      ASSERT_EQ(next.result.size(), current.size() + 1);
      ASSERT_TRUE(IsCommonIndependent(*p.m1, *p.m2, next.result));
      ASSERT_EQ(WeightOf(next.result, p.w),
                *testing::MaxWeightOfSize(family, p.w, next.result.size()));
      current = next.result;
      ++augmentations;
    }
  }
  EXPECT_GT(augmentations, 300);
}

TEST(AugmentTest, TriangleWeightDrops) {
  const Pair p = Triangle();
  const Augmentation first = AugmentExtreme(*p.m1, *p.m2, p.w, {});
  EXPECT_EQ(first.result, (ElementSet{0}));
  const Augmentation second = AugmentExtreme(*p.m1, *p.m2, p.w, first.result);
  EXPECT_EQ(second.result, (ElementSet{1, 2}));
  try {
    AugmentExtreme(*p.m1, *p.m2, p.w, second.result);
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoAugmentation);
  }
}

TEST(AugmentTest, TightnessBipartite) {
  const Pair p = TightnessPair(Rational(3, 2));
  const Augmentation r = AugmentExtreme(*p.m1, *p.m2, p.w, {1});
  EXPECT_EQ(r.result, (ElementSet{0, 2}));
}

TEST(MaxWeightTest, Examples) {
  const Pair t = Triangle();
  const IntersectionResult r = MaxWeightCommonIndependent(*t.m1, *t.m2, t.w);
  EXPECT_EQ(r.elements, (ElementSet{0}));
  EXPECT_EQ(r.weight, 10);
  EXPECT_EQ(r.extreme_weights, (std::vector<Rational>{0, 10, 2}));
  auto free = std::make_shared<UniformMatroid>(3, 3);
  const std::vector<Rational> unit = {1, 1, 1};
  const IntersectionResult all = MaxWeightCommonIndependent(*free, *free, unit);
  EXPECT_EQ(all.elements, (ElementSet{0, 1, 2}));
  EXPECT_EQ(all.weight, 3);
}

TEST(MaxWeightTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const Pair p = RandomPair(rng, 8, 6);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    const IntersectionResult r = MaxWeightCommonIndependent(*p.m1, *p.m2, p.w);
    ASSERT_TRUE(IsCommonIndependent(*p.m1, *p.m2, r.elements));
    ASSERT_EQ(r.weight, testing::MaxWeightOver(family, p.w)) << trial;
  }
}

TEST(MaxWeightTest, BipartiteEncodingMatchesMatching) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int left = testing::Draw(rng, 1, 4);
    const int right = testing::Draw(rng, 1, 4);
    std::vector<Edge> edges;
    for (int e = testing::Draw(rng, 0, 9); e > 0; --e) {
      edges.push_back({testing::Draw(rng, 0, left - 1),
                       left + testing::Draw(rng, 0, right - 1),
                       testing::RandomWeight(rng, 5)});
    }
    const WeightedGraph g(left + right, edges);
    std::vector<int> side(left);
    std::iota(side.begin(), side.end(), 0);
    const auto [m1, m2] = BipartiteMatroids(g, side);
    EXPECT_EQ(testing::AllCommonIndependent(*m1, *m2),
              testing::AllMatchings(g));
    const std::vector<Rational> w = g.Weights();
    EXPECT_EQ(MaxWeightCommonIndependent(*m1, *m2, w).weight,
              MaxWeightMatching(g).weight);
  }
}

TEST(LexMaxTest, TightnessBipartite) {
  const Pair p = TightnessPair(Rational(3, 2));
  const IntersectionResult r = LexMaximalCommonIndependent(*p.m1, *p.m2, p.w);
  EXPECT_EQ(r.elements, (ElementSet{1}));
  EXPECT_EQ(r.weight, Rational(3, 2));
  EXPECT_EQ(r.signature.counts, (std::vector<int>{1, 0}));
}

TEST(LexMaxTest, UniformWeightsGiveMaximumCardinality) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    Pair p = RandomPair(rng, 7, 1);
    std::fill(p.w.begin(), p.w.end(), 2);
    size_t best = 0;
    for (const auto& s : testing::AllCommonIndependent(*p.m1, *p.m2)) {
      best = std::max(best, s.size());
    }
    EXPECT_EQ(LexMaximalCommonIndependent(*p.m1, *p.m2, p.w).elements.size(),
              best);
  }
}

TEST(LexMaxTest, AgreesWithEnumerationAcrossBases) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const Pair p = RandomPair(rng, 8, 4);
    const auto expected = testing::LexMaxCountsOver(
        testing::AllCommonIndependent(*p.m1, *p.m2), p.w);
    for (int base : {3, 5, static_cast<int>(p.w.size()) + 1}) {
      if (base <= 2) continue;
      const IntersectionResult r =
          LexMaximalCommonIndependent(*p.m1, *p.m2, p.w, base);
      ASSERT_EQ(r.signature.counts, expected) << trial << " base " << base;
      ASSERT_EQ(r.weight, WeightOf(r.elements, p.w));
    }
  }
}

TEST(BruteForceTest, Examples) {
  auto free = std::make_shared<UniformMatroid>(3, 3);
  const std::vector<Rational> unit = {1, 1, 1};
  EXPECT_EQ(
      BruteForceCommonIndependent(*free, *free, unit, Objective::kMaxWeight)
          .optima,
      (std::vector<ElementSet>{{0, 1, 2}}));
  const Pair t = Triangle();
  EXPECT_EQ(
      BruteForceCommonIndependent(*t.m1, *t.m2, t.w, Objective::kMaxWeight)
          .optima,
      (std::vector<ElementSet>{{0}}));
  const Pair p = TightnessPair(2);
  const OracleResult two =
      BruteForceCommonIndependent(*p.m1, *p.m2, p.w, Objective::kMaxWeight);
  EXPECT_EQ(two.optima, (std::vector<ElementSet>{{0, 2}, {1}}));
  auto big = std::make_shared<UniformMatroid>(13, 2);
  const std::vector<Rational> w13(13, 1);
  EXPECT_THROW(
      BruteForceCommonIndependent(*big, *big, w13, Objective::kMaxWeight),
      LexoptError);
}

TEST(DeficientTest, TightnessBipartite) {
  const Pair p = TightnessPair(2);
  EXPECT_EQ(SmallestDeficientIndex(*p.m1, *p.m2, p.w, {0, 2}), 0);
  EXPECT_EQ(SmallestDeficientIndex(*p.m1, *p.m2, p.w, {1}), std::nullopt);
  EXPECT_THROW(SmallestDeficientIndex(*p.m1, *p.m2, p.w, {0, 1}), LexoptError);
}

std::optional<int> PrefixOracle(const Pair& p, const ElementSet& x) {
  const WeightClasses c = ComputeWeightClasses(p.w);
  for (int i = 0; i < c.k(); ++i) {
    ElementSet keep;
    for (Element e = 0; e < static_cast<int>(p.w.size()); ++e) {
      if (c.class_of[e] <= i) keep.push_back(e);
    }
    const RestrictedMatroid r1(p.m1, keep);
    const RestrictedMatroid r2(p.m2, keep);
    auto best =
        testing::LexMaxCountsOver(testing::AllCommonIndependent(r1, r2), p.w);
    auto mine = testing::NaiveCounts(x, p.w);
    best.resize(i + 1);
    mine.resize(i + 1);
    if (mine != best) return i;
  }
  return std::nullopt;
}

TEST(DeficientTest, AgreesWithPrefixEnumeration) {
  std::mt19937_64 rng(16);
  int deficient = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Pair p = RandomPair(rng, 8, 3);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    const ElementSet& x = family[rng() % family.size()];
    const auto expected = PrefixOracle(p, x);
    ASSERT_EQ(SmallestDeficientIndex(*p.m1, *p.m2, p.w, x), expected);
    if (expected) ++deficient;
  }
  EXPECT_GT(deficient, 50);
}

void CheckPrefix(const Pair& p, const ElementSet& x, int i,
                 const PrefixAugmentation& aug) {
  const WeightClasses c = ComputeWeightClasses(p.w);
  const ElementSet prefix = PrefixUpTo(x, c, i);
  ASSERT_EQ(PrefixUpTo(aug.result, c, i), aug.result);
  ASSERT_TRUE(IsCommonIndependent(*p.m1, *p.m2, aug.result));
  const auto before = testing::NaiveCounts(x, p.w);
  const auto after = testing::NaiveCounts(aug.result, p.w);
  for (int j = 0; j < i; ++j) ASSERT_EQ(after[j], before[j]);
  ASSERT_EQ(after[i], before[i] + 1);
  ASSERT_TRUE(IsSubset(Span(*p.m1, prefix), Span(*p.m1, aug.result)));
  ASSERT_TRUE(IsSubset(Span(*p.m2, prefix), Span(*p.m2, aug.result)));
}

TEST(PrefixAugmentTest, TightnessBipartite) {
  const Pair p = TightnessPair(2);
  const PrefixAugmentation aug =
      AugmentDeficientPrefix(p.m1, p.m2, p.w, {0, 2}, 0);
  EXPECT_EQ(aug.result, (ElementSet{1}));
  CheckPrefix(p, {0, 2}, 0, aug);
}

TEST(PrefixAugmentTest, EmptySetGetsSingleton) {
  const Pair t = Triangle();
  const PrefixAugmentation aug = AugmentDeficientPrefix(t.m1, t.m2, t.w, {}, 0);
  EXPECT_EQ(aug.result, (ElementSet{0}));
  EXPECT_EQ(aug.path, (ExchangePath{0}));
}

TEST(PrefixAugmentTest, WrongIndex) {
  const Pair p = TightnessPair(2);
  try {
    AugmentDeficientPrefix(p.m1, p.m2, p.w, {0, 2}, 1);
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDeficientAtIndex);
  }
  EXPECT_THROW(AugmentDeficientPrefix(p.m1, p.m2, p.w, {1}, 0), LexoptError);
}

TEST(PrefixAugmentTest, RandomPostconditions) {
  std::mt19937_64 rng(18);
  int checked = 0;
  while (checked < 300) {
    const Pair p = RandomPair(rng, 8, 4);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    const ElementSet& x = family[rng() % family.size()];
    const auto i = SmallestDeficientIndex(*p.m1, *p.m2, p.w, x);
    if (!i) continue;
    CheckPrefix(p, x, *i, AugmentDeficientPrefix(p.m1, p.m2, p.w, x, *i));
    ++checked;
  }
}

void CheckEligible(const Pair& p, const ElementSet& x,
                   const EligibleStep& step) {
  const WeightClasses c = ComputeWeightClasses(p.w);
  const int i = step.index;
  ASSERT_TRUE(IsCommonIndependent(*p.m1, *p.m2, step.result));
  const auto before = testing::NaiveCounts(x, p.w);
  const auto after = testing::NaiveCounts(step.result, p.w);
  for (int j = 0; j < i; ++j) ASSERT_EQ(after[j], before[j]);
  ASSERT_EQ(after[i], before[i] + 1);
  const ElementSet lost =
      SetDifference(SuffixAfter(x, c, i), SuffixAfter(step.result, c, i));
  ASSERT_LE(lost.size(), 2u);
  ASSERT_EQ(lost, step.removed);
  ASSERT_TRUE(IsSubset(step.removed, SuffixAfter(x, c, i)));
  const Alpha alpha = ComputeAlpha(c);
  if (alpha.is_finite()) {
    const Rational slack = (2 - alpha.value()) / alpha.value() * c.levels[i];
    ASSERT_GE(WeightOf(step.result, p.w), WeightOf(x, p.w) - slack);
  }
}

TEST(EligibleTest, TightnessBipartite) {
  const Pair p = TightnessPair(2);
  const EligibleStep step = EligibleImprovement(p.m1, p.m2, p.w, {0, 2});
  EXPECT_EQ(step.result, (ElementSet{1}));
  EXPECT_EQ(step.removed, (ElementSet{0, 2}));
  CheckEligible(p, {0, 2}, step);
}

TEST(EligibleTest, NoRemovalNeeded) {
  // Free matroids: Y' plus the lighter part is already independent.
  auto free = std::make_shared<UniformMatroid>(3, 3);
  const std::vector<Rational> w = {3, 1, 1};
  const EligibleStep step = EligibleImprovement(free, free, w, {1, 2});
  EXPECT_EQ(step.result, (ElementSet{0, 1, 2}));
  EXPECT_TRUE(step.removed.empty());
}

TEST(EligibleTest, RejectsLexMaximal) {
  const Pair p = TightnessPair(2);
  try {
    EligibleImprovement(p.m1, p.m2, p.w, {1});
    FAIL();
  } catch (const LexoptError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlreadyLexMaximal);
  }
}

// Replays the repair: the lightest circuit element of X_{>i}, M1 first.
TEST(EligibleTest, RandomStepsAreEligible) {
  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 300) {
    const Pair p = RandomPair(rng, 8, 4);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    const ElementSet& x = family[rng() % family.size()];
    const auto i = SmallestDeficientIndex(*p.m1, *p.m2, p.w, x);
    if (!i) continue;
    const EligibleStep step = EligibleImprovement(p.m1, p.m2, p.w, x);
    ASSERT_EQ(step.index, *i);
    CheckEligible(p, x, step);
    const WeightClasses c = ComputeWeightClasses(p.w);
    const ElementSet prime =
        AugmentDeficientPrefix(p.m1, p.m2, p.w, x, *i).result;
    ElementSet current = SetUnion(prime, SuffixAfter(x, c, *i));
    for (const MatroidPtr& m : {p.m1, p.m2}) {
      const auto circuit = FindCircuit(*m, current);
      if (!circuit) continue;
      const ElementSet candidates = SetDifference(
          *circuit, SetDifference(*circuit, SuffixAfter(x, c, *i)));
      ASSERT_FALSE(candidates.empty());
      Element lightest = candidates.front();
      for (Element e : candidates) {
        if (p.w[e] < p.w[lightest]) lightest = e;
      }
      current = SetDifference(current, {lightest});
    }
    ASSERT_EQ(current, step.result);
    ++checked;
  }
}

TEST(EligibleTest, IterationReachesLexopt) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    const Pair p = RandomPair(rng, 8, 4);
    const auto family = testing::AllCommonIndependent(*p.m1, *p.m2);
    ElementSet x = family[rng() % family.size()];
    const int k = ComputeWeightClasses(p.w).k();
    int last = -1;
    int steps = 0;
    while (auto i = SmallestDeficientIndex(*p.m1, *p.m2, p.w, x)) {
      ASSERT_GE(*i, last);
      last = *i;
      x = EligibleImprovement(p.m1, p.m2, p.w, x).result;
      ASSERT_LE(++steps, static_cast<int>(p.w.size()) * k);
    }
    EXPECT_EQ(testing::NaiveCounts(x, p.w),
              testing::LexMaxCountsOver(family, p.w));
    EXPECT_EQ(WeightOf(x, p.w),
              LexMaximalCommonIndependent(*p.m1, *p.m2, p.w).weight);
  }
}

TEST(GreedyTest, Triangle) {
  const Pair t = Triangle();
  EXPECT_EQ(GreedyCommonIndependent(*t.m1, *t.m2, t.w).elements,
            (ElementSet{0}));
}

}  // namespace
}  // namespace lexopt
