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

#include "lexopt/core.h"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <string>

#include "lexopt/error.h"

namespace lexopt {

ElementSet MakeSet(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

void CheckElements(std::span<const Element> set, int ground_size) {
  for (Element e : set) {
    if (e < 0 || e >= ground_size) {
      throw LexoptError(ErrorCode::kUnknownElement,
                        "element " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(ground_size));
    }
  }
}

ElementSet SetUnion(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet SetDifference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ElementSet SetSymmetricDifference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

bool SetContains(const ElementSet& set, Element e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool IsSubset(const ElementSet& sub, const ElementSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

WeightClasses ComputeWeightClasses(std::span<const Rational> weights) {
  WeightClasses classes;
  for (size_t e = 0; e < weights.size(); ++e) {
    if (sgn(weights[e]) <= 0) {
      throw LexoptError(ErrorCode::kInvalidWeight,
                        "weight of element " + std::to_string(e) + " is " +
                            FormatRational(weights[e]));
    }
  }
  classes.levels.assign(weights.begin(), weights.end());
  std::sort(classes.levels.begin(), classes.levels.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  classes.levels.erase(
      std::unique(classes.levels.begin(), classes.levels.end()),
      classes.levels.end());
  classes.class_of.resize(weights.size());
  classes.classes.resize(classes.levels.size());
  for (size_t e = 0; e < weights.size(); ++e) {
    auto it = std::lower_bound(
        classes.levels.begin(), classes.levels.end(), weights[e],
        [](const Rational& a, const Rational& b) { return a > b; });
    const int index = static_cast<int>(it - classes.levels.begin());
    classes.class_of[e] = index;
    classes.classes[index].push_back(static_cast<Element>(e));
  }
  return classes;
}

Alpha ComputeAlpha(const WeightClasses& classes) {
  if (classes.k() <= 1) return Alpha::Infinite();
  Rational best = classes.levels[0] / classes.levels[1];
  for (int i = 1; i + 1 < classes.k(); ++i) {
    Rational ratio = classes.levels[i] / classes.levels[i + 1];
    if (ratio < best) best = ratio;
  }
  return Alpha::Finite(best);
}

int LexSignature::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

LexSignature ComputeSignature(std::span<const Element> set,
                              const WeightClasses& classes) {
  CheckElements(set, classes.ground_size());
  LexSignature sig;
  sig.counts.assign(classes.k(), 0);
  for (Element e : set) ++sig.counts[classes.class_of[e]];
  return sig;
}

LexOrder CompareSignatures(const LexSignature& a, const LexSignature& b) {
  const size_t n = std::max(a.counts.size(), b.counts.size());
  for (size_t i = 0; i < n; ++i) {
    const int x = i < a.counts.size() ? a.counts[i] : 0;
    const int y = i < b.counts.size() ? b.counts[i] : 0;
    if (x != y) return x > y ? LexOrder::kLarger : LexOrder::kSmaller;
  }
  return LexOrder::kEqual;
}

LexOrder LexCompare(std::span<const Element> x, std::span<const Element> y,
                    const WeightClasses& classes) {
  return CompareSignatures(ComputeSignature(x, classes),
                           ComputeSignature(y, classes));
}

ElementSet PrefixUpTo(const ElementSet& set, const WeightClasses& classes,
                      int index) {
  CheckElements(set, classes.ground_size());
  ElementSet out;
  for (Element e : set) {
    if (classes.class_of[e] <= index) out.push_back(e);
  }
  return out;
}

ElementSet SuffixAfter(const ElementSet& set, const WeightClasses& classes,
                       int index) {
  CheckElements(set, classes.ground_size());
  ElementSet out;
  for (Element e : set) {
    if (classes.class_of[e] > index) out.push_back(e);
  }
  return out;
}

std::vector<Rational> DispersedWeights(const WeightClasses& classes,
                                       const BigInt& base) {
  if (base <= 2) {
    throw LexoptError(ErrorCode::kInvalidBase,
                      "reduction base must exceed 2, got " + base.get_str());
  }
  std::vector<Rational> level_weight(classes.k());
  BigInt power = 1;
  for (int i = classes.k() - 1; i >= 0; --i) {
    level_weight[i] = Rational(power);
    power *= base;
  }
  std::vector<Rational> out(classes.ground_size());
  for (int e = 0; e < classes.ground_size(); ++e) {
    out[e] = level_weight[classes.class_of[e]];
  }
  return out;
}

Rational WeightOf(std::span<const Element> set,
                  std::span<const Rational> weights) {
  CheckElements(set, static_cast<int>(weights.size()));
  Rational total = 0;
  for (Element e : set) total += weights[e];
  return total;
}

int OracleLimit(int default_limit) {
  const char* env = std::getenv("LEXOPT_ORACLE_LIMIT");
  if (env == nullptr || *env == '\0') return default_limit;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value <= 0 || value > 30) return default_limit;
  return static_cast<int>(value);
}

}  // namespace lexopt
