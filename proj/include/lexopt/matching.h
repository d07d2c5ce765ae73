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

#ifndef LEXOPT_MATCHING_H_
#define LEXOPT_MATCHING_H_

#include <optional>
#include <span>
#include <vector>

#include "lexopt/core.h"
#include "lexopt/rational.h"

namespace lexopt {

struct Edge {
  int u = 0;
  int v = 0;
  Rational weight;
};

// Undirected multigraph with strictly positive edge weights. Edge i is
// element i of the ground set. Parallel edges are allowed, self-loops are
// not.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws kInvalidGraph on a bad endpoint or self-loop, kInvalidWeight on a
  // non-positive weight.
  WeightedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  std::vector<Rational> Weights() const;

  // Subgraph on the listed edges. `original` maps new edge index to the old.
  WeightedGraph Restrict(const ElementSet& keep,
                         std::vector<Element>* original) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

struct MatchingResult {
  ElementSet edges;
  Rational weight;
  LexSignature signature;
};

// Throws kUnknownElement on an invalid edge index.
bool IsMatching(const WeightedGraph& graph, std::span<const Element> edges);

// Exact maximum-weight matching (weighted blossom algorithm on exact
// rationals). `weights` overrides the graph's own weights when non-empty.
// The result's weight is measured with the graph's own weights.
MatchingResult MaxWeightMatching(const WeightedGraph& graph,
                                 std::span<const Rational> weights = {});

// Lex-maximal matching, computed as a maximum-weight matching under
// dispersed weights with the given base (> 2).
MatchingResult LexMaximalMatching(const WeightedGraph& graph,
                                  const BigInt& base = kDefaultReductionBase);

inline constexpr int kDefaultMatchingOracleEdges = 16;

// Enumerates every matching. Throws kOracleTooLarge above the edge bound
// (OracleLimit(kDefaultMatchingOracleEdges) when `edge_limit` <= 0).
OracleResult BruteForceMatchings(const WeightedGraph& graph,
                                 Objective objective, int edge_limit = 0);

// Smallest class index i such that X_{<=i} is not lex-maximal among the
// matchings of the subgraph on classes 0..i; nullopt when X is lex-maximal.
// Throws kInvalidSolution when X is not a matching.
std::optional<int> SmallestDeficientIndexMatching(const WeightedGraph& graph,
                                                  const ElementSet& x);

// Flips X_{<=i} along an alternating path of X_{<=i} (+) Z_{<=i}, with Z a
// lex-maximal matching, that carries one more class-i edge of Z than of X,
// then drops the lighter edges of X that touch the path's end vertices.
// Throws kAlreadyLexMaximal when X is lex-maximal.
EligibleStep EligibleImprovementMatching(const WeightedGraph& graph,
                                         const ElementSet& x);

// Greedy by descending weight, ties by edge index.
MatchingResult GreedyMatching(const WeightedGraph& graph);

namespace internal {

// Maximum-weight matching on a simple or multi graph; returns mate per
// vertex as an edge index or -1. Exposed for testing.
std::vector<int> BlossomMatching(int vertex_count,
                                 std::span<const std::pair<int, int>> ends,
                                 std::span<const Rational> weights);

}  // namespace internal

}  // namespace lexopt

#endif  // LEXOPT_MATCHING_H_
