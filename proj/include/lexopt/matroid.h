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

#ifndef LEXOPT_MATROID_H_
#define LEXOPT_MATROID_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexopt/core.h"
#include "lexopt/rational.h"

namespace lexopt {

// A matroid given by its independence oracle. Rank, span and circuits are
// derived from IsIndependent alone. Implementations are immutable.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual std::string_view kind() const = 0;

  // `set` is sorted, duplicate free and inside the ground set.
  virtual bool IsIndependent(std::span<const Element> set) const = 0;

  // Elements of [0, ground_size) that belong to this matroid's ground set.
  // Only restrictions exclude anything.
  virtual bool HasElement(Element e) const {
    return e >= 0 && e < ground_size();
  }
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Validates `set` against the ground set before querying the oracle.
bool IsIndependentChecked(const Matroid& matroid, const ElementSet& set);

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);

  int ground_size() const override { return ground_size_; }
  std::string_view kind() const override { return "uniform"; }
  bool IsIndependent(std::span<const Element> set) const override;
  int rank() const { return rank_; }

 private:
  int ground_size_;
  int rank_;
};

class PartitionMatroid : public Matroid {
 public:
  // Every element of [0, ground_size) must lie in exactly one block.
  PartitionMatroid(int ground_size, std::vector<ElementSet> blocks,
                   std::vector<int> capacities);

  int ground_size() const override { return ground_size_; }
  std::string_view kind() const override { return "partition"; }
  bool IsIndependent(std::span<const Element> set) const override;
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  int ground_size_;
  std::vector<ElementSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// Cycle matroid of a multigraph; element i is edge i. Self-loops are
// allowed and are dependent on their own.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  std::string_view kind() const override { return "graphic"; }
  bool IsIndependent(std::span<const Element> set) const override;
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a rational matrix; element i is column i.
class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(std::vector<std::vector<Rational>> rows);

  int ground_size() const override { return columns_; }
  std::string_view kind() const override { return "linear"; }
  bool IsIndependent(std::span<const Element> set) const override;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  int columns_;
};

// Matroid listed by its family of independent sets. The family is taken as
// given; VerifyMatroidAxioms reports whether it really is a matroid.
class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(int ground_size, std::vector<ElementSet> independent_sets);

  int ground_size() const override { return ground_size_; }
  std::string_view kind() const override { return "explicit"; }
  bool IsIndependent(std::span<const Element> set) const override;
  const std::vector<ElementSet>& independent_sets() const { return family_; }

 private:
  int ground_size_;
  std::vector<ElementSet> family_;
};

// Deletion of everything outside `keep`. Element indices are preserved;
// deleted elements are never independent and are skipped by rank and span.
class RestrictedMatroid : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr base, ElementSet keep);

  int ground_size() const override { return base_->ground_size(); }
  std::string_view kind() const override { return "restriction"; }
  bool IsIndependent(std::span<const Element> set) const override;
  bool HasElement(Element e) const override;
  const ElementSet& kept() const { return keep_; }

 private:
  MatroidPtr base_;
  ElementSet keep_;
  std::vector<bool> mask_;
};

// Size of a maximal independent subset of S, grown greedily in index order.
int Rank(const Matroid& matroid, const ElementSet& set);

// { e in ground : rank(S + e) = rank(S) }.
ElementSet Span(const Matroid& matroid, const ElementSet& set);

// nullopt when S is independent; otherwise a circuit inside S obtained by
// dropping elements in descending index order while S stays dependent.
std::optional<ElementSet> FindCircuit(const Matroid& matroid,
                                      const ElementSet& set);

struct AxiomReport {
  bool passed = true;
  std::string violation;
};

inline constexpr int kDefaultMatroidOracleGround = 12;

// Exhaustive check of: the empty set is independent, independence is
// hereditary, and the exchange axiom. Throws kTooLarge above the bound.
AxiomReport VerifyMatroidAxioms(const Matroid& matroid, int ground_limit = 0);

// Independence of every subset of the ground set, indexed by bitmask.
// Throws kTooLarge above the bound.
std::vector<bool> IndependenceTable(const Matroid& matroid,
                                    int ground_limit = 0);

}  // namespace lexopt

#endif  // LEXOPT_MATROID_H_
