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

#ifndef LEXOPT_CORE_H_
#define LEXOPT_CORE_H_

#include <optional>
#include <span>
#include <vector>

#include "lexopt/rational.h"

namespace lexopt {

// Elements of a ground set are dense indices 0..n-1.
using Element = int;

// A subset of the ground set, kept sorted and duplicate free.
using ElementSet = std::vector<Element>;

// Sorts and deduplicates.
ElementSet MakeSet(std::vector<Element> elements);

// Throws kUnknownElement unless every element lies in [0, ground_size).
void CheckElements(std::span<const Element> set, int ground_size);

ElementSet SetUnion(const ElementSet& a, const ElementSet& b);
ElementSet SetDifference(const ElementSet& a, const ElementSet& b);
ElementSet SetSymmetricDifference(const ElementSet& a, const ElementSet& b);
bool SetContains(const ElementSet& set, Element e);
bool IsSubset(const ElementSet& sub, const ElementSet& super);

// Partition of the ground set by distinct weight value. Class 0 holds the
// heaviest elements; levels[i] is the weight shared by class i.
struct WeightClasses {
  std::vector<Rational> levels;
  std::vector<int> class_of;
  std::vector<ElementSet> classes;

  int k() const { return static_cast<int>(levels.size()); }
  int ground_size() const { return static_cast<int>(class_of.size()); }
};

// Throws kInvalidWeight on a non-positive weight.
WeightClasses ComputeWeightClasses(std::span<const Rational> weights);

// Minimum ratio of consecutive weight levels; infinite when k <= 1.
class Alpha {
 public:
  static Alpha Infinite() { return Alpha(); }
  static Alpha Finite(Rational value) { return Alpha(std::move(value)); }

  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const { return *value_; }

  // True when the threshold 2 is strictly exceeded (always for infinity).
  bool ExceedsTwo() const { return !is_finite() || *value_ > 2; }

  friend bool operator==(const Alpha& a, const Alpha& b) {
    return a.value_ == b.value_;
  }

 private:
  Alpha() = default;
  explicit Alpha(Rational value) : value_(std::move(value)) {}

  std::optional<Rational> value_;
};

Alpha ComputeAlpha(const WeightClasses& classes);

// The count vector |X_0|, ..., |X_{k-1}|.
struct LexSignature {
  std::vector<int> counts;

  int total() const;
  friend bool operator==(const LexSignature&, const LexSignature&) = default;
};

enum class LexOrder { kLarger, kSmaller, kEqual };

LexSignature ComputeSignature(std::span<const Element> set,
                              const WeightClasses& classes);

LexOrder CompareSignatures(const LexSignature& a, const LexSignature& b);

// Compares X against Y.
LexOrder LexCompare(std::span<const Element> x, std::span<const Element> y,
                    const WeightClasses& classes);

// The elements of `set` belonging to classes 0..index (X_{<=i}).
ElementSet PrefixUpTo(const ElementSet& set, const WeightClasses& classes,
                      int index);

// The elements of `set` belonging to classes index+1..k-1 (X_{>i}).
ElementSet SuffixAfter(const ElementSet& set, const WeightClasses& classes,
                       int index);

// Replaces class-i weights by base^(k-1-i). Throws kInvalidBase when
// base <= 2.
std::vector<Rational> DispersedWeights(const WeightClasses& classes,
                                       const BigInt& base);

inline constexpr int kDefaultReductionBase = 3;

// Exact sum of the weights of `set`; 0 for the empty set.
Rational WeightOf(std::span<const Element> set,
                  std::span<const Rational> weights);

enum class Objective { kMaxWeight, kLexMax };

// Result of an exhaustive search. `optima` is sorted lexicographically by
// sorted element sequence, so optima.front() is the canonical tie-break.
struct OracleResult {
  std::vector<ElementSet> optima;
  Rational weight;
  LexSignature signature;
  long long feasible_count = 0;
};

// One eligible improvement step.
struct EligibleStep {
  ElementSet result;
  int index = 0;
  ElementSet removed;  // X_{>i} \ Y_{>i}
};

// Brute-force size bound: LEXOPT_ORACLE_LIMIT when set to a positive
// integer, otherwise `default_limit`.
int OracleLimit(int default_limit);

}  // namespace lexopt

#endif  // LEXOPT_CORE_H_
