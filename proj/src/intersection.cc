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

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lexopt/error.h"

namespace lexopt {
namespace {

bool InBoth(const Matroid& m1, const Matroid& m2, Element e) {
  return m1.HasElement(e) && m2.HasElement(e);
}

ElementSet Insert(ElementSet set, Element e) {
  set.insert(std::upper_bound(set.begin(), set.end(), e), e);
  return set;
}

ElementSet Erase(ElementSet set, Element e) {
  set.erase(std::lower_bound(set.begin(), set.end(), e));
  return set;
}

void CheckWeights(const Matroid& m1, const Matroid& m2,
                  std::span<const Rational> weights) {
  if (m1.ground_size() != m2.ground_size() ||
      static_cast<int>(weights.size()) != m1.ground_size()) {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "matroids and weights disagree on the ground set size");
  }
  for (const Rational& w : weights) {
    if (sgn(w) <= 0) {
      throw LexoptError(ErrorCode::kInvalidWeight,
                        "non-positive weight " + FormatRational(w));
    }
  }
}

void RequireCommonIndependent(const Matroid& m1, const Matroid& m2,
                              const ElementSet& set) {
  if (!IsCommonIndependent(m1, m2, set)) {
    throw LexoptError(ErrorCode::kInvalidSolution,
                      "set is not common independent");
  }
}

// Label of the best walk found so far into a vertex.
struct WalkLabel {
  bool reached = false;
  Rational cost;
  ExchangePath walk;
};

bool Better(const Rational& cost, const ExchangePath& walk,
            const WalkLabel& label) {
  if (!label.reached) return true;
  if (cost != label.cost) return cost < label.cost;
  return walk < label.walk;
}

std::optional<Augmentation> TryAugment(const Matroid& m1, const Matroid& m2,
                                       std::span<const Rational> weights,
                                       const ElementSet& independent) {
  const ExchangeabilityGraph graph =
      BuildExchangeabilityGraph(m1, m2, independent, weights);
  std::optional<ExchangePath> path = ShortestCheapestPath(graph);
  if (!path) return std::nullopt;
  Augmentation out;
  out.result = SetSymmetricDifference(independent, MakeSet(*path));
  out.path = std::move(*path);
  return out;
}

}  // namespace

bool IsCommonIndependent(const Matroid& m1, const Matroid& m2,
                         const ElementSet& set) {
  return IsIndependentChecked(m1, set) && IsIndependentChecked(m2, set);
}

ExchangeabilityGraph BuildExchangeabilityGraph(
    const Matroid& m1, const Matroid& m2, const ElementSet& independent,
    std::span<const Rational> weights) {
  CheckWeights(m1, m2, weights);
  RequireCommonIndependent(m1, m2, independent);
  ExchangeabilityGraph graph;
  graph.ground_size = m1.ground_size();
  graph.inside = independent;
  graph.cost.resize(graph.ground_size);
  graph.successors.resize(graph.ground_size);
  for (Element e = 0; e < graph.ground_size; ++e) {
    const bool inside = SetContains(independent, e);
    graph.cost[e] = inside ? weights[e] : Rational(-weights[e]);
    if (!inside && InBoth(m1, m2, e)) graph.outside.push_back(e);
  }
  for (Element x : graph.outside) {
    const ElementSet plus = Insert(independent, x);
    if (m1.IsIndependent(plus)) graph.sources.push_back(x);
    if (m2.IsIndependent(plus)) graph.sinks.push_back(x);
    for (Element y : independent) {
      const ElementSet swapped = Erase(plus, y);
      if (m1.IsIndependent(swapped)) {
        graph.arcs_into_outside.emplace_back(y, x);
        graph.successors[y].push_back(x);
      }
      if (m2.IsIndependent(swapped)) {
        graph.arcs_into_inside.emplace_back(x, y);
        graph.successors[x].push_back(y);
      }
    }
  }
  std::sort(graph.arcs_into_outside.begin(), graph.arcs_into_outside.end());
  std::sort(graph.arcs_into_inside.begin(), graph.arcs_into_inside.end());
  for (auto& list : graph.successors) std::sort(list.begin(), list.end());
  return graph;
}

std::optional<ExchangePath> ShortestCheapestPath(
    const ExchangeabilityGraph& graph) {
  // Layer h holds, per vertex, the cheapest walk of exactly h vertices that
  // starts at a source (ties by vertex sequence). Without negative cycles a
  // cheapest walk of minimum length is a simple path, so V layers suffice;
  // one extra layer detects a reachable negative cycle.
  const int n = graph.ground_size;
  const int vertices =
      static_cast<int>(graph.inside.size() + graph.outside.size());
  std::vector<bool> is_sink(n, false);
  for (Element t : graph.sinks) is_sink[t] = true;

  std::vector<WalkLabel> layer(n);
  for (Element s : graph.sources) {
    layer[s].reached = true;
    layer[s].cost = graph.cost[s];
    layer[s].walk = {s};
  }
  std::vector<WalkLabel> best_any(n);
  std::optional<ExchangePath> best_path;
  Rational best_cost;

  for (int h = 1; h <= vertices + 1; ++h) {
    bool improved = false;
    for (Element v = 0; v < n; ++v) {
      if (!layer[v].reached) continue;
      if (!best_any[v].reached || layer[v].cost < best_any[v].cost) {
        improved = true;
        if (h <= vertices) best_any[v] = layer[v];
      }
      if (h <= vertices && is_sink[v]) {
        if (!best_path || layer[v].cost < best_cost ||
            (layer[v].cost == best_cost &&
             (layer[v].walk.size() < best_path->size() ||
              (layer[v].walk.size() == best_path->size() &&
               layer[v].walk < *best_path)))) {
          best_path = layer[v].walk;
          best_cost = layer[v].cost;
        }
      }
    }
    if (h == vertices + 1) {
      if (improved) {
        throw LexoptError(ErrorCode::kNotExtremeInput,
                          "negative-cost cycle reachable from the sources");
      }
      break;
    }
    // Once no vertex gets cheaper, no later layer can either.
    if (!improved) break;
    std::vector<WalkLabel> next(n);
    for (Element v = 0; v < n; ++v) {
      if (!layer[v].reached) continue;
      for (Element u : graph.successors[v]) {
        Rational cost = layer[v].cost + graph.cost[u];
        ExchangePath walk = layer[v].walk;
        walk.push_back(u);
        if (Better(cost, walk, next[u])) {
          next[u].reached = true;
          next[u].cost = std::move(cost);
          next[u].walk = std::move(walk);
        }
      }
    }
    layer = std::move(next);
  }
  return best_path;
}

Augmentation AugmentExtreme(const Matroid& m1, const Matroid& m2,
                            std::span<const Rational> weights,
                            const ElementSet& independent) {
  std::optional<Augmentation> out = TryAugment(m1, m2, weights, independent);
  if (!out) {
    throw LexoptError(ErrorCode::kNoAugmentation,
                      "no source-sink path: no larger common independent set");
  }
  return *out;
}

IntersectionResult MaxWeightCommonIndependent(
    const Matroid& m1, const Matroid& m2, std::span<const Rational> weights,
    std::span<const Rational> report_weights) {
  CheckWeights(m1, m2, weights);
  if (report_weights.empty()) report_weights = weights;
  CheckWeights(m1, m2, report_weights);
  IntersectionResult result;
  ElementSet current;
  Rational best_weight = 0;
  result.extreme_weights.push_back(0);
  while (std::optional<Augmentation> step =
             TryAugment(m1, m2, weights, current)) {
    current = std::move(step->result);
    Rational weight = WeightOf(current, weights);
    if (weight > best_weight) {
      best_weight = weight;
      result.elements = current;
    }
    result.extreme_weights.push_back(std::move(weight));
  }
  result.weight = WeightOf(result.elements, report_weights);
  result.signature =
      ComputeSignature(result.elements, ComputeWeightClasses(report_weights));
  return result;
}

IntersectionResult LexMaximalCommonIndependent(
    const Matroid& m1, const Matroid& m2, std::span<const Rational> weights,
    const BigInt& base) {
  CheckWeights(m1, m2, weights);
  const std::vector<Rational> dispersed =
      DispersedWeights(ComputeWeightClasses(weights), base);
  return MaxWeightCommonIndependent(m1, m2, dispersed, weights);
}

std::optional<int> SmallestDeficientIndex(const Matroid& m1, const Matroid& m2,
                                          std::span<const Rational> weights,
                                          const ElementSet& x) {
  CheckWeights(m1, m2, weights);
  RequireCommonIndependent(m1, m2, x);
  const WeightClasses classes = ComputeWeightClasses(weights);
  // A lex-maximal set restricted to classes 0..i is lex-maximal in the
  // restriction to those classes, so the first differing count is the index.
  const LexSignature best =
      LexMaximalCommonIndependent(m1, m2, weights).signature;
  const LexSignature mine = ComputeSignature(x, classes);
  for (int i = 0; i < classes.k(); ++i) {
    if (mine.counts[i] != best.counts[i]) return i;
  }
  return std::nullopt;
}

PrefixAugmentation AugmentDeficientPrefix(const MatroidPtr& m1,
                                          const MatroidPtr& m2,
                                          std::span<const Rational> weights,
                                          const ElementSet& x, int index) {
  const std::optional<int> deficient =
      SmallestDeficientIndex(*m1, *m2, weights, x);
  if (!deficient || *deficient != index) {
    throw LexoptError(ErrorCode::kNotDeficientAtIndex,
                      "class " + std::to_string(index) +
                          " is not the smallest deficient index");
  }
  const WeightClasses classes = ComputeWeightClasses(weights);
  ElementSet prefix_ground;
  for (int j = 0; j <= index; ++j) {
    prefix_ground = SetUnion(prefix_ground, classes.classes[j]);
  }
  const BigInt n = static_cast<unsigned long>(prefix_ground.size());
  std::vector<Rational> auxiliary(weights.size(), Rational(1));
  for (Element e : prefix_ground) {
    BigInt power = 1;
    for (int p = 0; p < index - classes.class_of[e]; ++p) power *= n;
    auxiliary[e] = Rational(power);
  }
  const RestrictedMatroid r1(m1, prefix_ground);
  const RestrictedMatroid r2(m2, prefix_ground);
  Augmentation step =
      AugmentExtreme(r1, r2, auxiliary, PrefixUpTo(x, classes, index));
  return {std::move(step.result), std::move(step.path)};
}

EligibleStep EligibleImprovement(const MatroidPtr& m1, const MatroidPtr& m2,
                                 std::span<const Rational> weights,
                                 const ElementSet& x) {
  const std::optional<int> deficient =
      SmallestDeficientIndex(*m1, *m2, weights, x);
  if (!deficient) {
    throw LexoptError(ErrorCode::kAlreadyLexMaximal,
                      "common independent set is already lex-maximal");
  }
  const int index = *deficient;
  const WeightClasses classes = ComputeWeightClasses(weights);
  const ElementSet lighter = SuffixAfter(x, classes, index);
  EligibleStep step;
  step.index = index;
  step.result = SetUnion(
      AugmentDeficientPrefix(m1, m2, weights, x, index).result, lighter);
  for (const Matroid* m : {m1.get(), m2.get()}) {
    const std::optional<ElementSet> circuit = FindCircuit(*m, step.result);
    if (!circuit) continue;
    // Drop the lightest lighter-class element of the unique circuit.
    std::optional<Element> drop;
    for (Element e : *circuit) {
      if (!SetContains(lighter, e)) continue;
      if (!drop || weights[e] < weights[*drop]) drop = e;
    }
    if (!drop) throw std::logic_error("circuit avoids the lighter classes");
    step.result = Erase(std::move(step.result), *drop);
    step.removed.push_back(*drop);
  }
  step.removed = MakeSet(std::move(step.removed));
  if (!IsCommonIndependent(*m1, *m2, step.result)) {
    throw std::logic_error("eligible repair left a dependent set");
  }
  return step;
}

OracleResult BruteForceCommonIndependent(const Matroid& m1, const Matroid& m2,
                                         std::span<const Rational> weights,
                                         Objective objective,
                                         int ground_limit) {
  CheckWeights(m1, m2, weights);
  const int limit = ground_limit > 0
                        ? ground_limit
                        : OracleLimit(kDefaultIntersectionOracleGround);
  const std::vector<bool> t1 = IndependenceTable(m1, limit);
  const std::vector<bool> t2 = IndependenceTable(m2, limit);
  const WeightClasses classes = ComputeWeightClasses(weights);
  const int n = m1.ground_size();
  OracleResult result;
  bool have_best = false;
  for (unsigned mask = 0; mask < t1.size(); ++mask) {
    if (!t1[mask] || !t2[mask]) continue;
    ++result.feasible_count;
    ElementSet set;
    for (int e = 0; e < n; ++e) {
      if (mask & (1u << e)) set.push_back(e);
    }
    int order = 1;
    Rational weight = WeightOf(set, weights);
    LexSignature signature = ComputeSignature(set, classes);
    if (have_best) {
      if (objective == Objective::kMaxWeight) {
        order = weight > result.weight ? 1 : (weight == result.weight ? 0 : -1);
      } else {
        const LexOrder cmp = CompareSignatures(signature, result.signature);
        order =
            cmp == LexOrder::kLarger ? 1 : (cmp == LexOrder::kEqual ? 0 : -1);
      }
    }
    if (order > 0) {
      result.optima.clear();
      result.weight = weight;
      result.signature = signature;
      have_best = true;
    }
    if (order >= 0) result.optima.push_back(std::move(set));
  }
  std::sort(result.optima.begin(), result.optima.end());
  result.weight = WeightOf(result.optima.front(), weights);
  result.signature = ComputeSignature(result.optima.front(), classes);
  return result;
}

IntersectionResult GreedyCommonIndependent(const Matroid& m1, const Matroid& m2,
                                           std::span<const Rational> weights) {
  CheckWeights(m1, m2, weights);
  std::vector<Element> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return weights[a] > weights[b];
  });
  ElementSet chosen;
  for (Element e : order) {
    if (!InBoth(m1, m2, e)) continue;
    ElementSet trial = Insert(chosen, e);
    if (IsCommonIndependent(m1, m2, trial)) chosen = std::move(trial);
  }
  IntersectionResult result;
  result.weight = WeightOf(chosen, weights);
  result.signature = ComputeSignature(chosen, ComputeWeightClasses(weights));
  result.elements = std::move(chosen);
  return result;
}

std::pair<MatroidPtr, MatroidPtr> BipartiteMatroids(
    const WeightedGraph& graph, const std::vector<int>& left_vertices) {
  std::vector<bool> is_left(graph.vertex_count(), false);
  for (int v : left_vertices) {
    if (v < 0 || v >= graph.vertex_count()) {
      throw LexoptError(ErrorCode::kInvalidGraph, "left vertex out of range");
    }
    is_left[v] = true;
  }
  std::vector<ElementSet> by_left(graph.vertex_count());
  std::vector<ElementSet> by_right(graph.vertex_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    int u = graph.edge(e).u;
    int v = graph.edge(e).v;
    if (is_left[u] == is_left[v]) {
      throw LexoptError(ErrorCode::kInvalidGraph,
                        "edge " + std::to_string(e) + " does not cross sides");
    }
    if (!is_left[u]) std::swap(u, v);
    by_left[u].push_back(e);
    by_right[v].push_back(e);
  }
  auto build = [&](std::vector<ElementSet> groups) {
    std::erase_if(groups, [](const ElementSet& g) { return g.empty(); });
    std::vector<int> capacities(groups.size(), 1);
    return std::make_shared<const PartitionMatroid>(
        graph.edge_count(), std::move(groups), std::move(capacities));
  };
  return {build(std::move(by_left)), build(std::move(by_right))};
}

}  // namespace lexopt
