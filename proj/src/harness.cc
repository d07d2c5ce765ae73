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

#include "lexopt/harness.h"

#include <algorithm>
#include <exception>
#include <map>
#include <string>
#include <type_traits>

#include "lexopt/error.h"

namespace lexopt {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// (2 - a) / a for a finite alpha.
Rational StepLossFactor(const Alpha& alpha) {
  return (2 - alpha.value()) / alpha.value();
}

bool SameSignature(const LexSignature& a, const LexSignature& b) {
  return CompareSignatures(a, b) == LexOrder::kEqual;
}

}  // namespace

InstanceKind Instance::kind() const {
  return std::holds_alternative<WeightedGraph>(problem)
             ? InstanceKind::kMatching
             : InstanceKind::kIntersection;
}

std::vector<Rational> Instance::weights() const {
  return std::visit(Overloaded{
                        [](const WeightedGraph& g) { return g.Weights(); },
                        [](const MatroidPair& p) { return p.weights; },
                    },
                    problem);
}

int Instance::ground_size() const {
  return std::visit(Overloaded{
                        [](const WeightedGraph& g) { return g.edge_count(); },
                        [](const MatroidPair& p) {
                          return static_cast<int>(p.weights.size());
                        },
                    },
                    problem);
}

void ValidateInstance(const Instance& instance) {
  if (const auto* pair = std::get_if<MatroidPair>(&instance.problem)) {
    if (!pair->first || !pair->second) {
      throw LexoptError(ErrorCode::kInvalidParameter, "missing matroid");
    }
    const int n = static_cast<int>(pair->weights.size());
    if (pair->first->ground_size() != n || pair->second->ground_size() != n) {
      throw LexoptError(ErrorCode::kInvalidParameter,
                        "matroid ground sizes and weight count differ");
    }
  }
  // Positivity.
  ComputeWeightClasses(instance.weights());
}

Solution Solve(const Instance& instance, Objective objective) {
  return std::visit(
      Overloaded{
          [&](const WeightedGraph& g) {
            MatchingResult r = objective == Objective::kMaxWeight
                                   ? MaxWeightMatching(g)
                                   : LexMaximalMatching(g);
            return Solution{std::move(r.edges), std::move(r.weight),
                            std::move(r.signature)};
          },
          [&](const MatroidPair& p) {
            IntersectionResult r =
                objective == Objective::kMaxWeight
                    ? MaxWeightCommonIndependent(*p.first, *p.second, p.weights)
                    : LexMaximalCommonIndependent(*p.first, *p.second,
                                                  p.weights);
            return Solution{std::move(r.elements), std::move(r.weight),
                            std::move(r.signature)};
          },
      },
      instance.problem);
}

bool IsFeasible(const Instance& instance, const ElementSet& set) {
  return std::visit(
      Overloaded{
          [&](const WeightedGraph& g) { return IsMatching(g, set); },
          [&](const MatroidPair& p) {
            return IsCommonIndependent(*p.first, *p.second, set);
          },
      },
      instance.problem);
}

std::optional<OracleResult> TryOracle(const Instance& instance,
                                      Objective objective) {
  try {
    return std::visit(Overloaded{
                          [&](const WeightedGraph& g) {
                            return BruteForceMatchings(g, objective);
                          },
                          [&](const MatroidPair& p) {
                            return BruteForceCommonIndependent(
                                *p.first, *p.second, p.weights, objective);
                          },
                      },
                      instance.problem);
  } catch (const LexoptError& e) {
    if (e.code() == ErrorCode::kOracleTooLarge ||
        e.code() == ErrorCode::kTooLarge) {
      return std::nullopt;
    }
    throw;
  }
}

std::optional<int> SmallestDeficient(const Instance& instance,
                                     const ElementSet& set) {
  return std::visit(Overloaded{
                        [&](const WeightedGraph& g) {
                          return SmallestDeficientIndexMatching(g, set);
                        },
                        [&](const MatroidPair& p) {
                          return SmallestDeficientIndex(*p.first, *p.second,
                                                        p.weights, set);
                        },
                    },
                    instance.problem);
}

EligibleStep EligibleImprove(const Instance& instance, const ElementSet& set) {
  return std::visit(Overloaded{
                        [&](const WeightedGraph& g) {
                          return EligibleImprovementMatching(g, set);
                        },
                        [&](const MatroidPair& p) {
                          return EligibleImprovement(p.first, p.second,
                                                     p.weights, set);
                        },
                    },
                    instance.problem);
}

Instance TightnessExample(const Rational& x) {
  if (x <= 1 || x > 2) {
    throw LexoptError(
        ErrorCode::kInvalidParameter,
        "tightness parameter must lie in (1, 2], got " + FormatRational(x));
  }
  Instance instance;
  instance.problem = WeightedGraph(
      4, {Edge{0, 2, Rational(1)}, Edge{1, 2, x}, Edge{1, 3, Rational(1)}});
  instance.metadata["family"] = "tightness";
  instance.metadata["x"] = FormatRational(x);
  return instance;
}

VerificationReport VerifyBound(const Instance& instance,
                               const VerifyOptions& options) {
  ValidateInstance(instance);
  const std::vector<Rational> weights = instance.weights();
  const WeightClasses classes = ComputeWeightClasses(weights);
  VerificationReport report;
  report.alpha = ComputeAlpha(classes);
  report.regime =
      report.alpha.ExceedsTwo() ? Regime::kEquivalence : Regime::kBound;

  const Solution best = Solve(instance, Objective::kMaxWeight);
  const Solution lex = Solve(instance, Objective::kLexMax);
  report.opt = best.weight;
  report.lexopt = lex.weight;
  report.opt_solution = best.elements;
  report.lexopt_solution = lex.elements;
  report.lex_signature = lex.signature;
  report.ratio =
      sgn(report.opt) == 0 ? Rational(1) : report.lexopt / report.opt;

  bool ok =
      IsFeasible(instance, best.elements) && IsFeasible(instance, lex.elements);
  if (!ok) report.notes.push_back("solver returned an infeasible set");

  if (auto oracle = TryOracle(instance, Objective::kMaxWeight)) {
    auto lex_oracle = TryOracle(instance, Objective::kLexMax);
    report.oracle_checked = true;
    if (oracle->weight != report.opt) {
      ok = false;
      report.notes.push_back("solver opt " + FormatRational(report.opt) +
                             " differs from enumerated " +
                             FormatRational(oracle->weight));
    }
    if (!SameSignature(lex_oracle->signature, report.lex_signature)) {
      ok = false;
      report.notes.push_back("lex-maximal signature differs from enumeration");
    }
    if (options.vice_versa) {
      report.vice_versa_checked = true;
      report.max_weight_optima = static_cast<int>(oracle->optima.size());
      report.vice_versa_holds = true;
      for (const ElementSet& optimum : oracle->optima) {
        if (!SameSignature(ComputeSignature(optimum, classes),
                           lex_oracle->signature)) {
          report.vice_versa_holds = false;
          report.non_lex_maximal_optimum = optimum;
          break;
        }
      }
    }
  }

  if (report.regime == Regime::kBound) {
    report.bound = report.alpha.value() / 2 * report.opt;
    if (report.lexopt < *report.bound) {
      ok = false;
      report.counterexample = {best.elements, lex.elements};
      report.notes.push_back("lexopt below (alpha/2) * opt");
    }
    if (report.vice_versa_holds == false) {
      report.notes.push_back(
          "vice-versa failure witnessed at alpha <= 2 (expected to be "
          "possible in this regime)");
    }
  } else {
    if (report.lexopt != report.opt) {
      ok = false;
      report.counterexample = {best.elements, lex.elements};
      report.notes.push_back("lexopt differs from opt although alpha > 2");
    }
    if (report.vice_versa_holds == false) {
      ok = false;
      report.counterexample = {*report.non_lex_maximal_optimum, lex.elements};
      report.notes.push_back(
          "a maximum-weight optimum is not lex-maximal although alpha > 2");
    }
  }
  report.passed = ok;
  return report;
}

ChainReport EligibleChain(const Instance& instance,
                          const std::optional<ElementSet>& start) {
  ValidateInstance(instance);
  const std::vector<Rational> weights = instance.weights();
  const WeightClasses classes = ComputeWeightClasses(weights);
  const Alpha alpha = ComputeAlpha(classes);
  ChainReport report;
  if (start) {
    report.start = MakeSet(*start);
    CheckElements(report.start, instance.ground_size());
    if (!IsFeasible(instance, report.start)) {
      throw LexoptError(ErrorCode::kInvalidSolution,
                        "chain start is not feasible");
    }
  } else if (auto oracle = TryOracle(instance, Objective::kMaxWeight)) {
    report.start = oracle->optima.front();
  } else {
    report.start = Solve(instance, Objective::kMaxWeight).elements;
  }
  report.start_weight = WeightOf(report.start, weights);
  const Solution lex = Solve(instance, Objective::kLexMax);
  report.lexopt = lex.weight;

  const int max_steps = instance.ground_size() * classes.k() + 1;
  bool steps_ok = true;
  ElementSet current = report.start;
  while (SmallestDeficient(instance, current).has_value()) {
    if (static_cast<int>(report.steps.size()) > max_steps) {
      steps_ok = false;
      break;
    }
    EligibleStep step = EligibleImprove(instance, current);
    ChainStep record;
    record.index = step.index;
    record.before = current;
    record.after = step.result;
    record.removed = step.removed;
    record.weight_before = WeightOf(current, weights);
    record.weight_after = WeightOf(step.result, weights);

    const LexSignature from = ComputeSignature(current, classes);
    const LexSignature to = ComputeSignature(step.result, classes);
    bool eligible = IsFeasible(instance, step.result);
    for (int j = 0; j < step.index; ++j) {
      eligible = eligible && from.counts[j] == to.counts[j];
    }
    eligible = eligible && to.counts[step.index] == from.counts[step.index] + 1;
    const ElementSet lost =
        SetDifference(SuffixAfter(current, classes, step.index),
                      SuffixAfter(step.result, classes, step.index));
    eligible = eligible && lost.size() <= 2 && lost == step.removed;
    record.eligible = eligible;

    const Rational& level = classes.levels[step.index];
    if (alpha.is_finite()) {
      record.step_bound = record.weight_after >=
                          record.weight_before - StepLossFactor(alpha) * level;
    } else {
      record.step_bound = record.weight_after > record.weight_before;
    }
    steps_ok = steps_ok && record.eligible && record.step_bound;
    current = std::move(step.result);
    report.steps.push_back(std::move(record));
  }
  report.end = current;
  report.end_weight = WeightOf(current, weights);

  report.indices_nondecreasing = true;
  for (size_t s = 1; s < report.steps.size(); ++s) {
    if (report.steps[s].index < report.steps[s - 1].index) {
      report.indices_nondecreasing = false;
    }
  }
  const LexSignature end_signature = ComputeSignature(report.end, classes);
  std::vector<int> per_class(classes.k(), 0);
  for (const ChainStep& s : report.steps) ++per_class[s.index];
  report.step_counts_within_bound = true;
  for (int i = 0; i < classes.k(); ++i) {
    if (per_class[i] > end_signature.counts[i]) {
      report.step_counts_within_bound = false;
    }
  }
  report.terminal_lex_maximal =
      steps_ok && SameSignature(end_signature, lex.signature);
  report.terminal_weight_is_lexopt = report.end_weight == report.lexopt;
  if (alpha.is_finite() && alpha.value() <= 2) {
    report.telescoped_bound =
        report.end_weight >=
        report.start_weight - StepLossFactor(alpha) * report.end_weight;
  } else {
    // Above the threshold every step strictly gains weight.
    report.telescoped_bound = report.end_weight >= report.start_weight;
  }
  report.passed = steps_ok && report.indices_nondecreasing &&
                  report.step_counts_within_bound &&
                  report.terminal_lex_maximal &&
                  report.terminal_weight_is_lexopt && report.telescoped_bound;
  return report;
}

GreedyReport GreedyBaseline(const Instance& instance) {
  ValidateInstance(instance);
  GreedyReport report;
  std::visit(Overloaded{
                 [&](const WeightedGraph& g) {
                   MatchingResult r = GreedyMatching(g);
                   report.solution = std::move(r.edges);
                   report.weight = std::move(r.weight);
                 },
                 [&](const MatroidPair& p) {
                   IntersectionResult r =
                       GreedyCommonIndependent(*p.first, *p.second, p.weights);
                   report.solution = std::move(r.elements);
                   report.weight = std::move(r.weight);
                 },
             },
             instance.problem);
  report.opt = Solve(instance, Objective::kMaxWeight).weight;
  report.ratio =
      sgn(report.opt) == 0 ? Rational(1) : report.weight / report.opt;
  return report;
}

std::string AlphaBucket(const Alpha& alpha) {
  if (!alpha.is_finite()) return "inf";
  const Rational& a = alpha.value();
  if (a > 2) return "(2,inf)";
  if (a > Rational(7, 4)) return "(7/4,2]";
  if (a > Rational(3, 2)) return "(3/2,7/4]";
  if (a > Rational(5, 4)) return "(5/4,3/2]";
  return "(1,5/4]";
}

SweepReport Sweep(const SweepConfig& config) {
  static const char* kBuckets[] = {"(1,5/4]", "(5/4,3/2]", "(3/2,7/4]",
                                   "(7/4,2]", "(2,inf)",   "inf"};
  std::map<std::string, BucketStats> buckets;
  SweepReport report;

  auto run = [&](const Instance& instance, const std::string& source,
                 bool chain, bool vice_versa) {
    InstanceSummary summary;
    summary.source = source;
    summary.seed = instance.seed;
    summary.kind = instance.kind();
    SweepFailure failure{instance, {}, std::nullopt, ""};
    bool ok = true;
    try {
      VerificationReport v = VerifyBound(instance, {vice_versa});
      summary.alpha = v.alpha;
      summary.opt = v.opt;
      summary.lexopt = v.lexopt;
      summary.ratio = v.ratio;
      summary.vice_versa_failure_witnessed = v.vice_versa_holds == false;
      ok = v.passed;
      failure.verification = v;
      if (chain) {
        ChainReport c = EligibleChain(instance);
        summary.chain_steps = static_cast<int>(c.steps.size());
        summary.chain_passed = c.passed;
        ok = ok && c.passed;
        failure.chain = std::move(c);
      }
    } catch (const std::exception& e) {
      ok = false;
      failure.error = e.what();
      summary.alpha = ComputeAlpha(ComputeWeightClasses(instance.weights()));
    }
    summary.passed = ok;

    BucketStats& b = buckets[AlphaBucket(summary.alpha)];
    ++b.instances;
    if (ok) ++b.passed;
    if (failure.error.empty()) {
      if (summary.lexopt == summary.opt) ++b.lexopt_equals_opt;
      if (summary.alpha.is_finite() &&
          (!b.min_alpha || summary.alpha.value() < *b.min_alpha)) {
        b.min_alpha = summary.alpha.value();
      }
      if (!b.min_ratio || summary.ratio < *b.min_ratio)
        b.min_ratio = summary.ratio;
      if (summary.alpha.is_finite() && summary.alpha.value() <= 2) {
        Rational over = summary.ratio / (summary.alpha.value() / 2);
        if (!b.min_ratio_over_bound || over < *b.min_ratio_over_bound) {
          b.min_ratio_over_bound = over;
        }
      }
    }
    ++report.total;
    if (ok) {
      ++report.passed;
    } else {
      report.failures.push_back(std::move(failure));
    }
    report.instances.push_back(std::move(summary));
  };

  for (size_t b = 0; b < config.batches.size(); ++b) {
    const SweepBatch& batch = config.batches[b];
    for (int i = 0; i < batch.count; ++i) {
      GeneratorParams params = batch.params;
      params.seed =
          DeriveSeed(batch.params.seed, static_cast<std::uint64_t>(i));
      run(GenerateInstance(params), "batch " + std::to_string(b), batch.chain,
          batch.vice_versa);
    }
  }
  for (const Rational& x : config.tightness) {
    run(TightnessExample(x), "tightness " + FormatRational(x), true, true);
  }
  for (const char* label : kBuckets) {
    auto it = buckets.find(label);
    if (it == buckets.end()) continue;
    it->second.label = label;
    report.buckets.push_back(it->second);
  }
  return report;
}

}  // namespace lexopt
