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

#include "lexopt/matching.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "lexopt/error.h"

namespace lexopt {
namespace {

std::vector<Rational> EffectiveWeights(const WeightedGraph& graph,
                                       std::span<const Rational> weights) {
  if (weights.empty()) return graph.Weights();
  if (static_cast<int>(weights.size()) != graph.edge_count()) {
    throw LexoptError(ErrorCode::kInvalidWeight,
                      "weight vector size does not match edge count");
  }
  for (const Rational& w : weights) {
    if (sgn(w) <= 0) {
      throw LexoptError(ErrorCode::kInvalidWeight,
                        "non-positive weight " + FormatRational(w));
    }
  }
  return {weights.begin(), weights.end()};
}

void RequireMatching(const WeightedGraph& graph, const ElementSet& x) {
  if (!IsMatching(graph, x)) {
    throw LexoptError(ErrorCode::kInvalidSolution, "not a matching");
  }
}

MatchingResult MakeResult(const WeightedGraph& graph, ElementSet edges) {
  MatchingResult result;
  const std::vector<Rational> weights = graph.Weights();
  result.weight = WeightOf(edges, weights);
  result.signature = ComputeSignature(edges, ComputeWeightClasses(weights));
  result.edges = std::move(edges);
  return result;
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw LexoptError(ErrorCode::kInvalidGraph, "negative vertex count");
  }
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw LexoptError(
          ErrorCode::kInvalidGraph,
          "edge " + std::to_string(i) + " has endpoint out of range");
    }
    if (e.u == e.v) {
      throw LexoptError(ErrorCode::kInvalidGraph,
                        "edge " + std::to_string(i) + " is a self-loop");
    }
    if (sgn(e.weight) <= 0) {
      throw LexoptError(ErrorCode::kInvalidWeight,
                        "edge " + std::to_string(i) + " has weight " +
                            FormatRational(e.weight));
    }
  }
}

std::vector<Rational> WeightedGraph::Weights() const {
  std::vector<Rational> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.weight);
  return out;
}

WeightedGraph WeightedGraph::Restrict(const ElementSet& keep,
                                      std::vector<Element>* original) const {
  CheckElements(keep, edge_count());
  std::vector<Edge> kept;
  if (original != nullptr) original->clear();
  for (Element e : keep) {
    kept.push_back(edges_[e]);
    if (original != nullptr) original->push_back(e);
  }
  return WeightedGraph(vertex_count_, std::move(kept));
}

bool IsMatching(const WeightedGraph& graph, std::span<const Element> edges) {
  CheckElements(edges, graph.edge_count());
  std::vector<bool> used(graph.vertex_count(), false);
  ElementSet seen(edges.begin(), edges.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (Element e : edges) {
    const Edge& edge = graph.edge(e);
    if (used[edge.u] || used[edge.v]) return false;
    used[edge.u] = used[edge.v] = true;
  }
  return true;
}

MatchingResult MaxWeightMatching(const WeightedGraph& graph,
                                 std::span<const Rational> weights) {
  const std::vector<Rational> effective = EffectiveWeights(graph, weights);
  // Among parallel edges only the heaviest (lowest index on ties) can be
  // useful, so the solver sees a simple graph.
  std::map<std::pair<int, int>, int> best;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    const auto key = std::minmax(edge.u, edge.v);
    auto [it, inserted] = best.try_emplace({key.first, key.second}, e);
    if (!inserted && effective[e] > effective[it->second]) it->second = e;
  }
  std::vector<std::pair<int, int>> ends;
  std::vector<Rational> simple_weights;
  std::vector<int> original;
  for (const auto& [key, e] : best) {
    ends.push_back(key);
    simple_weights.push_back(effective[e]);
    original.push_back(e);
  }
  const std::vector<int> mate =
      internal::BlossomMatching(graph.vertex_count(), ends, simple_weights);
  std::vector<Element> chosen;
  for (int m : mate) {
    if (m >= 0) chosen.push_back(original[m]);
  }
  return MakeResult(graph, MakeSet(std::move(chosen)));
}

MatchingResult LexMaximalMatching(const WeightedGraph& graph,
                                  const BigInt& base) {
  const WeightClasses classes = ComputeWeightClasses(graph.Weights());
  const std::vector<Rational> dispersed = DispersedWeights(classes, base);
  return MaxWeightMatching(graph, dispersed);
}

OracleResult BruteForceMatchings(const WeightedGraph& graph,
                                 Objective objective, int edge_limit) {
  const int limit =
      edge_limit > 0 ? edge_limit : OracleLimit(kDefaultMatchingOracleEdges);
  if (graph.edge_count() > limit) {
    throw LexoptError(ErrorCode::kOracleTooLarge,
                      std::to_string(graph.edge_count()) +
                          " edges exceed the oracle bound " +
                          std::to_string(limit));
  }
  const std::vector<Rational> weights = graph.Weights();
  const WeightClasses classes = ComputeWeightClasses(weights);
  OracleResult result;
  bool have_best = false;
  std::vector<bool> used(graph.vertex_count(), false);
  ElementSet current;
  LexSignature signature{std::vector<int>(classes.k(), 0)};
  Rational weight = 0;

  std::function<void(int)> visit = [&](int e) {
    if (e == graph.edge_count()) {
      ++result.feasible_count;
      int order;
      if (!have_best) {
        order = 1;
      } else if (objective == Objective::kMaxWeight) {
        order = weight > result.weight ? 1 : (weight == result.weight ? 0 : -1);
      } else {
        const LexOrder cmp = CompareSignatures(signature, result.signature);
        order =
            cmp == LexOrder::kLarger ? 1 : (cmp == LexOrder::kEqual ? 0 : -1);
      }
      if (order > 0) {
        result.optima.clear();
        result.weight = weight;
        result.signature = signature;
        have_best = true;
      }
      if (order >= 0) result.optima.push_back(current);
      return;
    }
    const Edge& edge = graph.edge(e);
    if (!used[edge.u] && !used[edge.v]) {
      used[edge.u] = used[edge.v] = true;
      current.push_back(e);
      ++signature.counts[classes.class_of[e]];
      weight += weights[e];
      visit(e + 1);
      weight -= weights[e];
      --signature.counts[classes.class_of[e]];
      current.pop_back();
      used[edge.u] = used[edge.v] = false;
    }
    visit(e + 1);
  };
  visit(0);
  std::sort(result.optima.begin(), result.optima.end());
  if (objective == Objective::kLexMax) {
    result.weight = WeightOf(result.optima.front(), weights);
  } else {
    result.signature = ComputeSignature(result.optima.front(), classes);
  }
  return result;
}

std::optional<int> SmallestDeficientIndexMatching(const WeightedGraph& graph,
                                                  const ElementSet& x) {
  RequireMatching(graph, x);
  const WeightClasses classes = ComputeWeightClasses(graph.Weights());
  // The classes 0..i part of a lex-maximal matching is lex-maximal in the
  // subgraph on those classes, so the first differing count is the index.
  const LexSignature best = LexMaximalMatching(graph).signature;
  const LexSignature mine = ComputeSignature(x, classes);
  for (int i = 0; i < classes.k(); ++i) {
    if (mine.counts[i] != best.counts[i]) return i;
  }
  return std::nullopt;
}

EligibleStep EligibleImprovementMatching(const WeightedGraph& graph,
                                         const ElementSet& x) {
  RequireMatching(graph, x);
  const std::optional<int> deficient = SmallestDeficientIndexMatching(graph, x);
  if (!deficient) {
    throw LexoptError(ErrorCode::kAlreadyLexMaximal,
                      "matching is already lex-maximal");
  }
  const int index = *deficient;
  const WeightClasses classes = ComputeWeightClasses(graph.Weights());
  const ElementSet z = LexMaximalMatching(graph).edges;
  const ElementSet x_prefix = PrefixUpTo(x, classes, index);
  const ElementSet z_prefix = PrefixUpTo(z, classes, index);
  const ElementSet diff = SetSymmetricDifference(x_prefix, z_prefix);

  // Components of the symmetric difference, each an alternating path or
  // cycle, grouped by union-find over shared vertices.
  std::vector<int> parent(graph.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (Element e : diff) {
    parent[find(graph.edge(e).u)] = find(graph.edge(e).v);
  }
  std::map<int, ElementSet> by_root;
  for (Element e : diff) by_root[find(graph.edge(e).u)].push_back(e);
  std::vector<ElementSet> components;
  for (auto& [root, edges] : by_root) components.push_back(std::move(edges));
  std::sort(components.begin(), components.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.front() < b.front();
            });

  for (const ElementSet& component : components) {
    std::vector<int> surplus(index + 1, 0);
    for (Element e : component) {
      surplus[classes.class_of[e]] += SetContains(z_prefix, e) ? 1 : -1;
    }
    bool qualifies = surplus[index] == 1;
    for (int j = 0; j < index && qualifies; ++j) qualifies = surplus[j] == 0;
    if (!qualifies) continue;

    std::map<int, int> degree;
    for (Element e : component) {
      ++degree[graph.edge(e).u];
      ++degree[graph.edge(e).v];
    }
    std::vector<bool> is_end(graph.vertex_count(), false);
    for (const auto& [v, d] : degree) {
      if (d == 1) is_end[v] = true;
    }
    EligibleStep step;
    step.index = index;
    ElementSet kept = SetSymmetricDifference(x_prefix, component);
    for (Element e : SuffixAfter(x, classes, index)) {
      const Edge& edge = graph.edge(e);
      if (is_end[edge.u] || is_end[edge.v]) {
        step.removed.push_back(e);
      } else {
        kept.push_back(e);
      }
    }
    step.result = MakeSet(std::move(kept));
    if (!IsMatching(graph, step.result)) {
      throw std::logic_error("alternating-path flip produced a non-matching");
    }
    return step;
  }
  throw std::logic_error("no alternating path with a class surplus found");
}

MatchingResult GreedyMatching(const WeightedGraph& graph) {
  std::vector<int> order(graph.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.edge(a).weight > graph.edge(b).weight;
  });
  std::vector<bool> used(graph.vertex_count(), false);
  std::vector<Element> chosen;
  for (int e : order) {
    const Edge& edge = graph.edge(e);
    if (used[edge.u] || used[edge.v]) continue;
    used[edge.u] = used[edge.v] = true;
    chosen.push_back(e);
  }
  return MakeResult(graph, MakeSet(std::move(chosen)));
}

}  // namespace lexopt
