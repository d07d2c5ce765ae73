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

#ifndef LEXOPT_INTERSECTION_H_
#define LEXOPT_INTERSECTION_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lexopt/core.h"
#include "lexopt/matching.h"
#include "lexopt/matroid.h"
#include "lexopt/rational.h"

namespace lexopt {

// Directed bipartite graph on (E \ I, I) for a common independent set I.
//   arcs_into_outside: (y, x), y in I, x not in I, I + x - y independent in M1
//   arcs_into_inside:  (x, y), x not in I, y in I, I + x - y independent in M2
//   sources: x not in I with I + x independent in M1
//   sinks:   x not in I with I + x independent in M2
// Vertex costs are w(e) on I and -w(e) off I.
struct ExchangeabilityGraph {
  int ground_size = 0;
  ElementSet inside;
  ElementSet outside;
  std::vector<std::pair<Element, Element>> arcs_into_outside;
  std::vector<std::pair<Element, Element>> arcs_into_inside;
  ElementSet sources;
  ElementSet sinks;
  std::vector<Rational> cost;
  // Out-neighbours of every element, sorted ascending.
  std::vector<std::vector<Element>> successors;
};

bool IsCommonIndependent(const Matroid& m1, const Matroid& m2,
                         const ElementSet& set);

// Throws kInvalidSolution unless `independent` is common independent.
ExchangeabilityGraph BuildExchangeabilityGraph(
    const Matroid& m1, const Matroid& m2, const ElementSet& independent,
    std::span<const Rational> weights);

// Sequence of vertices from a source to a sink.
using ExchangePath = std::vector<Element>;

// Cheapest S-T path by total vertex cost; ties by vertex count, then by the
// vertex sequence. nullopt when T is unreachable from S. Throws
// kNotExtremeInput when a negative-cost cycle is reachable from S.
std::optional<ExchangePath> ShortestCheapestPath(
    const ExchangeabilityGraph& graph);

struct Augmentation {
  ElementSet result;
  ExchangePath path;
};

// Flips an l-extreme common independent set along the shortest cheapest
// path, giving an (l+1)-extreme one. Throws kNoAugmentation when no path
// exists.
Augmentation AugmentExtreme(const Matroid& m1, const Matroid& m2,
                            std::span<const Rational> weights,
                            const ElementSet& independent);

struct IntersectionResult {
  ElementSet elements;
  Rational weight;
  LexSignature signature;
  // Weight of the l-extreme set found for l = 0, 1, 2, ...
  std::vector<Rational> extreme_weights;
};

// Augments from the empty set until no path remains and keeps the heaviest
// l-extreme set (smallest l on ties). `weights` drive the optimisation,
// while the reported weight and signature use `report_weights` when given.
IntersectionResult MaxWeightCommonIndependent(
    const Matroid& m1, const Matroid& m2, std::span<const Rational> weights,
    std::span<const Rational> report_weights = {});

// Maximum weight under dispersed weights of the given base.
IntersectionResult LexMaximalCommonIndependent(
    const Matroid& m1, const Matroid& m2, std::span<const Rational> weights,
    const BigInt& base = kDefaultReductionBase);

// Smallest class index i with X_{<=i} not lex-maximal among the common
// independent sets of the restriction to classes 0..i; nullopt when X is
// lex-maximal. Throws kInvalidSolution when X is not common independent.
std::optional<int> SmallestDeficientIndex(const Matroid& m1, const Matroid& m2,
                                          std::span<const Rational> weights,
                                          const ElementSet& x);

struct PrefixAugmentation {
  ElementSet result;  // Y' inside classes 0..i
  ExchangePath path;
};

// Augments X_{<=i} inside the restriction to classes 0..i using the
// auxiliary weights n^(i-j) on class j (n the restricted ground size). The
// result gains exactly one class-i element, keeps the heavier counts, and
// its spans in both matroids contain those of X_{<=i}. Throws
// kNotDeficientAtIndex unless i is X's smallest deficient index.
PrefixAugmentation AugmentDeficientPrefix(const MatroidPtr& m1,
                                          const MatroidPtr& m2,
                                          std::span<const Rational> weights,
                                          const ElementSet& x, int index);

// Y' united with X_{>i}, repaired by deleting one element of X_{>i} from the
// unique M1 circuit and then one from the unique M2 circuit when needed.
// Throws kAlreadyLexMaximal when X is lex-maximal.
EligibleStep EligibleImprovement(const MatroidPtr& m1, const MatroidPtr& m2,
                                 std::span<const Rational> weights,
                                 const ElementSet& x);

inline constexpr int kDefaultIntersectionOracleGround = 12;

// Exhaustive search over all subsets of the ground set. Throws kTooLarge
// above the bound.
OracleResult BruteForceCommonIndependent(const Matroid& m1, const Matroid& m2,
                                         std::span<const Rational> weights,
                                         Objective objective,
                                         int ground_limit = 0);

// Greedy by descending weight, ties by index.
IntersectionResult GreedyCommonIndependent(const Matroid& m1, const Matroid& m2,
                                           std::span<const Rational> weights);

// The pair of partition matroids whose common independent sets are the
// matchings of a bipartite graph. `left_vertices` names one side; every
// edge must join the two sides. The first matroid groups edges by their
// left endpoint, the second by their right endpoint.
std::pair<MatroidPtr, MatroidPtr> BipartiteMatroids(
    const WeightedGraph& graph, const std::vector<int>& left_vertices);

}  // namespace lexopt

#endif  // LEXOPT_INTERSECTION_H_
