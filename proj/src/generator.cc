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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexopt/error.h"
#include "lexopt/harness.h"

namespace lexopt {
namespace {

// Bounded draws built on the raw engine output, whose sequence the standard
// fixes, so generated instances are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int Uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

  bool Chance(int numerator, int denominator) {
    return Uniform(0, denominator - 1) < numerator;
  }

  template <class T>
  void Shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[Uniform(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void Require(bool condition, const std::string& message) {
  if (!condition) throw LexoptError(ErrorCode::kGenerationError, message);
}

// Distinct weight levels, heaviest first, whose consecutive ratios all lie
// in [alpha_min, alpha_max].
std::vector<Rational> DrawLevels(Rng& rng, int k, const Rational& alpha_min,
                                 const std::optional<Rational>& alpha_max) {
  const Rational upper =
      alpha_max ? *alpha_max : std::max(Rational(2 * alpha_min), Rational(6));
  std::vector<Rational> candidates = {alpha_min};
  if (alpha_max) candidates.push_back(*alpha_max);
  for (int q = 1; q <= 5; ++q) {
    for (int p = q + 1; Rational(p, q) <= upper; ++p) {
      Rational r(p, q);
      r.canonicalize();
      if (r >= alpha_min) candidates.push_back(r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<Rational> ratios(std::max(k - 1, 0));
  for (Rational& r : ratios) {
    r = candidates[rng.Uniform(0, static_cast<int>(candidates.size()) - 1)];
  }
  if (!ratios.empty() && rng.Chance(1, 2)) {
    ratios[rng.Uniform(0, static_cast<int>(ratios.size()) - 1)] = alpha_min;
  }
  Rational lightest(rng.Uniform(1, 3), rng.Uniform(1, 3));
  lightest.canonicalize();
  std::vector<Rational> levels(k);
  levels[k - 1] = lightest;
  for (int i = k - 2; i >= 0; --i) levels[i] = levels[i + 1] * ratios[i];
  return levels;
}

// Class index for each of n elements, every class used at least once.
std::vector<int> DrawClasses(Rng& rng, int n, int k) {
  std::vector<int> assignment(n);
  for (int e = 0; e < n; ++e) {
    assignment[e] = e < k ? e : rng.Uniform(0, k - 1);
  }
  rng.Shuffle(assignment);
  return assignment;
}

std::vector<ElementSet> RandomBlocks(Rng& rng, int n, int block_count) {
  std::vector<ElementSet> blocks(block_count);
  for (int e = 0; e < n; ++e)
    blocks[rng.Uniform(0, block_count - 1)].push_back(e);
  std::erase_if(blocks, [](const ElementSet& b) { return b.empty(); });
  return blocks;
}

MatroidPtr RandomPartition(Rng& rng, int n) {
  std::vector<ElementSet> blocks = RandomBlocks(rng, n, rng.Uniform(1, n));
  std::vector<int> capacities;
  for (const ElementSet& block : blocks) {
    const int cap = rng.Chance(3, 4) ? 1 : 2;
    capacities.push_back(std::min<int>(cap, static_cast<int>(block.size())));
  }
  return std::make_shared<const PartitionMatroid>(n, std::move(blocks),
                                                  std::move(capacities));
}

MatroidPtr RandomGraphic(Rng& rng, int n) {
  const int vertices = rng.Uniform(2, 5);
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < n; ++e) {
    const int u = rng.Uniform(0, vertices - 1);
    int v = rng.Uniform(0, vertices - 2);
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  return std::make_shared<const GraphicMatroid>(vertices, std::move(edges));
}

MatroidPtr RandomLinear(Rng& rng, int n) {
  const int rows = rng.Uniform(1, 4);
  std::vector<std::vector<Rational>> matrix(rows, std::vector<Rational>(n));
  for (auto& row : matrix) {
    for (Rational& entry : row) {
      if (rng.Chance(1, 5)) {
        entry = Rational(rng.Uniform(-3, 3), rng.Uniform(1, 3));
        entry.canonicalize();
      } else {
        entry = rng.Uniform(-2, 2);
      }
    }
  }
  return std::make_shared<const LinearMatroid>(std::move(matrix));
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t batch_seed, std::uint64_t index) {
  return SplitMix(SplitMix(batch_seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

Instance GenerateInstance(const GeneratorParams& params) {
  Require(params.k_min >= 1 && params.k_min <= params.k_max,
          "need 1 <= k_min <= k_max");
  Require(params.alpha_min > 1, "alpha_min must exceed 1");
  Require(!params.alpha_max || *params.alpha_max >= params.alpha_min,
          "alpha_max below alpha_min");
  Rng rng(params.seed);
  const int k = rng.Uniform(params.k_min, params.k_max);
  const std::vector<Rational> levels =
      DrawLevels(rng, k, params.alpha_min, params.alpha_max);

  Instance instance;
  instance.seed = params.seed;
  instance.metadata["k"] = std::to_string(k);
  instance.metadata["alpha_min"] = FormatRational(params.alpha_min);
  instance.metadata["alpha_max"] =
      params.alpha_max ? FormatRational(*params.alpha_max) : "inf";

  if (params.kind == InstanceKind::kMatching) {
    Require(
        params.min_vertices >= 2 && params.min_vertices <= params.max_vertices,
        "need 2 <= min_vertices <= max_vertices");
    Require(params.max_edges >= k, "max_edges below the number of levels");
    const int vertices = rng.Uniform(params.min_vertices, params.max_vertices);
    const int edge_count = rng.Uniform(k, params.max_edges);
    const std::vector<int> classes = DrawClasses(rng, edge_count, k);
    std::vector<Edge> edges;
    for (int e = 0; e < edge_count; ++e) {
      const int u = rng.Uniform(0, vertices - 1);
      int v = rng.Uniform(0, vertices - 2);
      if (v >= u) ++v;
      edges.push_back(Edge{u, v, levels[classes[e]]});
    }
    instance.problem = WeightedGraph(vertices, std::move(edges));
    instance.metadata["family"] = "random-multigraph";
  } else {
    Require(params.min_ground >= 1 && params.min_ground <= params.max_ground,
            "need 1 <= min_ground <= max_ground");
    Require(params.max_ground >= k, "max_ground below the number of levels");
    const int n =
        rng.Uniform(std::max(params.min_ground, k), params.max_ground);
    const std::vector<int> classes = DrawClasses(rng, n, k);
    MatroidPair pair;
    const int family = rng.Uniform(0, 3);
    switch (family) {
      case 0:
        pair.first = RandomPartition(rng, n);
        pair.second = RandomPartition(rng, n);
        instance.metadata["family"] = "partition-partition";
        break;
      case 1:
        pair.first = RandomGraphic(rng, n);
        pair.second = RandomPartition(rng, n);
        instance.metadata["family"] = "graphic-partition";
        break;
      case 2:
        pair.first =
            std::make_shared<const UniformMatroid>(n, rng.Uniform(1, n));
        pair.second = RandomGraphic(rng, n);
        instance.metadata["family"] = "uniform-graphic";
        break;
      default:
        pair.first = RandomLinear(rng, n);
        pair.second = RandomLinear(rng, n);
        instance.metadata["family"] = "linear-linear";
        break;
    }
    for (const MatroidPtr& m : {pair.first, pair.second}) {
      const AxiomReport axioms = VerifyMatroidAxioms(*m);
      Require(axioms.passed,
              "generated matroid fails axioms: " + axioms.violation);
    }
    for (int e = 0; e < n; ++e) pair.weights.push_back(levels[classes[e]]);
    instance.problem = std::move(pair);
  }
  const Alpha alpha = ComputeAlpha(ComputeWeightClasses(instance.weights()));
  Require(!alpha.is_finite() ||
              (alpha.value() >= params.alpha_min &&
               (!params.alpha_max || alpha.value() <= *params.alpha_max)),
          "alpha outside the requested range");
  return instance;
}

}  // namespace lexopt
