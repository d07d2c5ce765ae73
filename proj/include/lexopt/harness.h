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

#ifndef LEXOPT_HARNESS_H_
#define LEXOPT_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lexopt/core.h"
#include "lexopt/intersection.h"
#include "lexopt/matching.h"
#include "lexopt/matroid.h"
#include "lexopt/rational.h"

namespace lexopt {

enum class InstanceKind { kMatching, kIntersection };

struct MatroidPair {
  MatroidPtr first;
  MatroidPtr second;
  std::vector<Rational> weights;
};

struct Instance {
  std::variant<WeightedGraph, MatroidPair> problem;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> metadata;

  InstanceKind kind() const;
  std::vector<Rational> weights() const;
  int ground_size() const;
};

// Throws kInvalidWeight / kInvalidParameter when the pieces do not fit
// together (weight count, ground sizes).
void ValidateInstance(const Instance& instance);

struct Solution {
  ElementSet elements;
  Rational weight;
  LexSignature signature;
};

// Runs the exact solver for the instance's problem kind.
Solution Solve(const Instance& instance, Objective objective);

bool IsFeasible(const Instance& instance, const ElementSet& set);

// Exhaustive optimum; nullopt when the instance exceeds the oracle bound.
std::optional<OracleResult> TryOracle(const Instance& instance,
                                      Objective objective);

std::optional<int> SmallestDeficient(const Instance& instance,
                                     const ElementSet& set);

EligibleStep EligibleImprove(const Instance& instance, const ElementSet& set);

// ---------------------------------------------------------------------------
// Generation

struct GeneratorParams {
  InstanceKind kind = InstanceKind::kMatching;
  int min_vertices = 2;
  int max_vertices = 8;
  int max_edges = 12;
  int min_ground = 2;
  int max_ground = 9;
  int k_min = 2;
  int k_max = 3;
  // Every ratio of consecutive weight levels is drawn from
  // [alpha_min, alpha_max]; unbounded above when alpha_max is empty.
  Rational alpha_min = Rational(11, 10);
  std::optional<Rational> alpha_max = Rational(2);
  std::uint64_t seed = 0;
};

// Reproducible random instance; throws kGenerationError on infeasible
// parameters.
Instance GenerateInstance(const GeneratorParams& params);

// Seed of the index-th instance of a batch.
std::uint64_t DeriveSeed(std::uint64_t batch_seed, std::uint64_t index);

// Path 0-2, 1-2, 1-3 with weights 1, x, 1. Requires 1 < x <= 2.
Instance TightnessExample(const Rational& x);

// ---------------------------------------------------------------------------
// Verification

enum class Regime { kBound, kEquivalence };

struct VerificationReport {
  Alpha alpha = Alpha::Infinite();
  Rational opt;
  Rational lexopt;
  Rational ratio;
  std::optional<Rational> bound;  // (alpha/2) * opt in the bound regime
  Regime regime = Regime::kEquivalence;
  bool passed = false;
  bool oracle_checked = false;
  bool vice_versa_checked = false;
  // Whether every maximum-weight optimum is lex-maximal.
  std::optional<bool> vice_versa_holds;
  int max_weight_optima = 0;
  ElementSet opt_solution;
  ElementSet lexopt_solution;
  LexSignature lex_signature;
  // A maximum-weight optimum that is not lex-maximal, if one was found.
  std::optional<ElementSet> non_lex_maximal_optimum;
  // (maximum-weight solution, lex-maximal solution) when a check failed.
  std::optional<std::pair<ElementSet, ElementSet>> counterexample;
  std::vector<std::string> notes;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

struct VerifyOptions {
  // Enumerate all maximum-weight optima when within the oracle bound.
  bool vice_versa = true;
};

VerificationReport VerifyBound(const Instance& instance,
                               const VerifyOptions& options = {});

struct ChainStep {
  int index = 0;
  ElementSet before;
  ElementSet after;
  ElementSet removed;
  Rational weight_before;
  Rational weight_after;
  bool eligible = false;    // the three eligibility conditions
  bool step_bound = false;  // w(Y) >= w(X) - ((2-a)/a) * w_i

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct ChainReport {
  ElementSet start;
  ElementSet end;
  Rational start_weight;
  Rational end_weight;
  Rational lexopt;
  std::vector<ChainStep> steps;
  bool indices_nondecreasing = false;
  bool step_counts_within_bound = false;
  bool terminal_lex_maximal = false;
  bool terminal_weight_is_lexopt = false;
  bool telescoped_bound = false;
  bool passed = false;

  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

// Repeats eligible improvements from `start` (default: the canonical
// brute-force maximum-weight optimum, or the solver's optimum above the
// oracle bound) until lex-maximal, checking every step.
ChainReport EligibleChain(const Instance& instance,
                          const std::optional<ElementSet>& start = {});

struct GreedyReport {
  ElementSet solution;
  Rational weight;
  Rational opt;
  Rational ratio;
};

GreedyReport GreedyBaseline(const Instance& instance);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepBatch {
  GeneratorParams params;
  int count = 0;
  bool chain = true;
  bool vice_versa = true;
};

struct SweepConfig {
  std::vector<SweepBatch> batches;
  std::vector<Rational> tightness;
};

struct InstanceSummary {
  std::string source;
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::kMatching;
  Alpha alpha = Alpha::Infinite();
  Rational opt;
  Rational lexopt;
  Rational ratio;
  bool passed = false;
  int chain_steps = 0;
  bool chain_passed = true;
  bool vice_versa_failure_witnessed = false;

  friend bool operator==(const InstanceSummary&,
                         const InstanceSummary&) = default;
};

struct BucketStats {
  std::string label;
  int instances = 0;
  int passed = 0;
  int lexopt_equals_opt = 0;
  std::optional<Rational> min_alpha;
  std::optional<Rational> min_ratio;
  // Smallest ratio / (alpha/2); 1 means the bound is attained.
  std::optional<Rational> min_ratio_over_bound;

  friend bool operator==(const BucketStats&, const BucketStats&) = default;
};

struct SweepFailure {
  Instance instance;
  VerificationReport verification;
  std::optional<ChainReport> chain;
  std::string error;
};

struct SweepReport {
  std::vector<InstanceSummary> instances;
  std::vector<BucketStats> buckets;
  int total = 0;
  int passed = 0;
  std::vector<SweepFailure> failures;

  bool all_passed() const { return passed == total; }
};

// Alpha buckets: (1,5/4], (5/4,3/2], (3/2,7/4], (7/4,2], (2,inf), inf.
std::string AlphaBucket(const Alpha& alpha);

SweepReport Sweep(const SweepConfig& config);

}  // namespace lexopt

#endif  // LEXOPT_HARNESS_H_
