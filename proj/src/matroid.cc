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

#include "lexopt/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "lexopt/error.h"

namespace lexopt {
namespace {

ElementSet MaskToSet(unsigned mask) {
  ElementSet out;
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) out.push_back(e);
  }
  return out;
}

std::string SetToString(const ElementSet& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

void RequireSize(const Matroid& matroid, int ground_limit) {
  const int limit = ground_limit > 0 ? ground_limit
                                     : OracleLimit(kDefaultMatroidOracleGround);
  if (matroid.ground_size() > limit) {
    throw LexoptError(ErrorCode::kTooLarge,
                      "ground set of size " +
                          std::to_string(matroid.ground_size()) +
                          " exceeds exhaustive bound " + std::to_string(limit));
  }
}

}  // namespace

bool IsIndependentChecked(const Matroid& matroid, const ElementSet& set) {
  CheckElements(set, matroid.ground_size());
  return matroid.IsIndependent(set);
}

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : ground_size_(ground_size), rank_(rank) {
  if (ground_size < 0 || rank < 0) {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "uniform matroid needs non-negative size and rank");
  }
}

bool UniformMatroid::IsIndependent(std::span<const Element> set) const {
  return static_cast<int>(set.size()) <= rank_;
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<ElementSet> blocks,
                                   std::vector<int> capacities)
    : ground_size_(ground_size),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(ground_size, -1) {
  if (blocks_.size() != capacities_.size()) {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "partition matroid needs one capacity per block");
  }
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw LexoptError(ErrorCode::kInvalidParameter, "negative capacity");
    }
    blocks_[b] = MakeSet(blocks_[b]);
    CheckElements(blocks_[b], ground_size_);
    for (Element e : blocks_[b]) {
      if (block_of_[e] != -1) {
        throw LexoptError(ErrorCode::kInvalidParameter,
                          "element " + std::to_string(e) + " in two blocks");
      }
      block_of_[e] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < ground_size_; ++e) {
    if (block_of_[e] == -1) {
      throw LexoptError(ErrorCode::kInvalidParameter,
                        "element " + std::to_string(e) + " in no block");
    }
  }
}

bool PartitionMatroid::IsIndependent(std::span<const Element> set) const {
  std::vector<int> used(blocks_.size(), 0);
  for (Element e : set) {
    if (++used[block_of_[e]] > capacities_[block_of_[e]]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw LexoptError(ErrorCode::kInvalidParameter,
                        "graphic matroid edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IsIndependent(std::span<const Element> set) const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Element e : set) {
    const int a = find(edges_[e].first);
    const int b = find(edges_[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

LinearMatroid::LinearMatroid(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "linear matroid needs at least one row");
  }
  columns_ = static_cast<int>(rows_[0].size());
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != columns_) {
      throw LexoptError(ErrorCode::kInvalidParameter, "ragged matrix");
    }
  }
}

bool LinearMatroid::IsIndependent(std::span<const Element> set) const {
  const int cols = static_cast<int>(set.size());
  const int rows = static_cast<int>(rows_.size());
  if (cols > rows) return false;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = rows_[r][set[c]];
  }
  int pivot_row = 0;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (sgn(a[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) return false;
    std::swap(a[pivot], a[pivot_row]);
    for (int r = pivot_row + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational factor = a[r][c] / a[pivot_row][c];
      for (int k = c; k < cols; ++k) a[r][k] -= factor * a[pivot_row][k];
    }
    ++pivot_row;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int ground_size,
                                 std::vector<ElementSet> independent_sets)
    : ground_size_(ground_size) {
  for (auto& set : independent_sets) {
    set = MakeSet(set);
    CheckElements(set, ground_size_);
  }
  std::sort(independent_sets.begin(), independent_sets.end());
  independent_sets.erase(
      std::unique(independent_sets.begin(), independent_sets.end()),
      independent_sets.end());
  family_ = std::move(independent_sets);
}

bool ExplicitMatroid::IsIndependent(std::span<const Element> set) const {
  ElementSet key(set.begin(), set.end());
  return std::binary_search(family_.begin(), family_.end(), key);
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr base, ElementSet keep)
    : base_(std::move(base)),
      keep_(MakeSet(std::move(keep))),
      mask_(base_->ground_size(), false) {
  CheckElements(keep_, base_->ground_size());
  for (Element e : keep_) mask_[e] = base_->HasElement(e);
}

bool RestrictedMatroid::IsIndependent(std::span<const Element> set) const {
  for (Element e : set) {
    if (!mask_[e]) return false;
  }
  return base_->IsIndependent(set);
}

bool RestrictedMatroid::HasElement(Element e) const {
  return e >= 0 && e < ground_size() && mask_[e];
}

int Rank(const Matroid& matroid, const ElementSet& set) {
  CheckElements(set, matroid.ground_size());
  ElementSet basis;
  for (Element e : set) {
    if (!matroid.HasElement(e)) continue;
    ElementSet trial = basis;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
    if (matroid.IsIndependent(trial)) basis = std::move(trial);
  }
  return static_cast<int>(basis.size());
}

ElementSet Span(const Matroid& matroid, const ElementSet& set) {
  const int base_rank = Rank(matroid, set);
  ElementSet out;
  for (Element e = 0; e < matroid.ground_size(); ++e) {
    if (!matroid.HasElement(e)) continue;
    if (SetContains(set, e)) {
      out.push_back(e);
      continue;
    }
    ElementSet extended = set;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), e), e);
    if (Rank(matroid, extended) == base_rank) out.push_back(e);
  }
  return out;
}

std::optional<ElementSet> FindCircuit(const Matroid& matroid,
                                      const ElementSet& set) {
  CheckElements(set, matroid.ground_size());
  if (matroid.IsIndependent(set)) return std::nullopt;
  ElementSet circuit = set;
  for (auto it = set.rbegin(); it != set.rend(); ++it) {
    ElementSet smaller = circuit;
    smaller.erase(std::find(smaller.begin(), smaller.end(), *it));
    if (!matroid.IsIndependent(smaller)) circuit = std::move(smaller);
  }
  return circuit;
}

std::vector<bool> IndependenceTable(const Matroid& matroid, int ground_limit) {
  RequireSize(matroid, ground_limit);
  const unsigned full = 1u << matroid.ground_size();
  std::vector<bool> table(full);
  for (unsigned mask = 0; mask < full; ++mask) {
    table[mask] = matroid.IsIndependent(MaskToSet(mask));
  }
  return table;
}

AxiomReport VerifyMatroidAxioms(const Matroid& matroid, int ground_limit) {
  const std::vector<bool> table = IndependenceTable(matroid, ground_limit);
  const int n = matroid.ground_size();
  const unsigned full = 1u << n;
  AxiomReport report;
  if (!table[0]) {
    report.passed = false;
    report.violation = "empty set is dependent";
    return report;
  }
  std::vector<unsigned> independent;
  std::vector<unsigned> extendable(full, 0);
  for (unsigned mask = 0; mask < full; ++mask) {
    if (!table[mask]) continue;
    independent.push_back(mask);
    for (int e = 0; e < n; ++e) {
      const unsigned bit = 1u << e;
      if (mask & bit) {
        if (!table[mask ^ bit]) {
          report.passed = false;
          report.violation = "hereditary: " + SetToString(MaskToSet(mask)) +
                             " independent but " +
                             SetToString(MaskToSet(mask ^ bit)) + " is not";
          return report;
        }
      } else if (table[mask | bit]) {
        extendable[mask] |= bit;
      }
    }
  }
  for (unsigned small : independent) {
    for (unsigned large : independent) {
      if (std::popcount(small) >= std::popcount(large)) continue;
      if ((large & ~small & extendable[small]) == 0) {
        report.passed = false;
        report.violation = "exchange: no element of " +
                           SetToString(MaskToSet(large)) + " extends " +
                           SetToString(MaskToSet(small));
        return report;
      }
    }
  }
  return report;
}

}  // namespace lexopt
