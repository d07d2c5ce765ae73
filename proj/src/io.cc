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

#include "lexopt/io.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "lexopt/error.h"

namespace lexopt {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw LexoptError(ErrorCode::kParseError, message);
}

// Runs `body`, turning JSON library errors into kParseError.
template <class F>
auto Guard(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    Fail(e.what());
  }
}

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object()) Fail("expected an object");
  auto it = object.find(key);
  if (it == object.end()) Fail(std::string("missing field '") + key + "'");
  return *it;
}

Json SetToJson(const ElementSet& set) { return Json(set); }

ElementSet SetFromJson(const Json& value) {
  if (!value.is_array()) Fail("expected an array of element indices");
  ElementSet set;
  for (const Json& e : value) {
    if (!e.is_number_integer()) Fail("element indices must be integers");
    set.push_back(e.get<int>());
  }
  return MakeSet(std::move(set));
}

Json OptionalRational(const std::optional<Rational>& value) {
  return value ? RationalToJson(*value) : Json(nullptr);
}

std::optional<Rational> OptionalRationalFromJson(const Json& value) {
  if (value.is_null()) return std::nullopt;
  return RationalFromJson(value);
}

std::string KindName(InstanceKind kind) {
  return kind == InstanceKind::kMatching ? "matching" : "intersection";
}

InstanceKind KindFromName(const std::string& name) {
  if (name == "matching") return InstanceKind::kMatching;
  if (name == "intersection") return InstanceKind::kIntersection;
  Fail("unknown instance kind '" + name + "'");
}

Json SignatureToJson(const LexSignature& s) { return Json(s.counts); }

LexSignature SignatureFromJson(const Json& value) {
  return LexSignature{value.get<std::vector<int>>()};
}

Json BucketToJson(const BucketStats& b) {
  Json out;
  out["label"] = b.label;
  out["instances"] = b.instances;
  out["passed"] = b.passed;
  out["lexopt_equals_opt"] = b.lexopt_equals_opt;
  out["min_alpha"] = OptionalRational(b.min_alpha);
  out["min_ratio"] = OptionalRational(b.min_ratio);
  out["min_ratio_over_bound"] = OptionalRational(b.min_ratio_over_bound);
  return out;
}

BucketStats BucketFromJson(const Json& v) {
  BucketStats b;
  b.label = Field(v, "label").get<std::string>();
  b.instances = Field(v, "instances").get<int>();
  b.passed = Field(v, "passed").get<int>();
  b.lexopt_equals_opt = Field(v, "lexopt_equals_opt").get<int>();
  b.min_alpha = OptionalRationalFromJson(Field(v, "min_alpha"));
  b.min_ratio = OptionalRationalFromJson(Field(v, "min_ratio"));
  b.min_ratio_over_bound =
      OptionalRationalFromJson(Field(v, "min_ratio_over_bound"));
  return b;
}

Json SummaryToJson(const InstanceSummary& s) {
  Json out;
  out["source"] = s.source;
  out["seed"] = s.seed;
  out["kind"] = KindName(s.kind);
  out["alpha"] = AlphaToJson(s.alpha);
  out["opt"] = RationalToJson(s.opt);
  out["lexopt"] = RationalToJson(s.lexopt);
  out["ratio"] = RationalToJson(s.ratio);
  out["passed"] = s.passed;
  out["chain_steps"] = s.chain_steps;
  out["chain_passed"] = s.chain_passed;
  out["vice_versa_failure_witnessed"] = s.vice_versa_failure_witnessed;
  return out;
}

InstanceSummary SummaryFromJson(const Json& v) {
  InstanceSummary s;
  s.source = Field(v, "source").get<std::string>();
  s.seed = Field(v, "seed").get<std::uint64_t>();
  s.kind = KindFromName(Field(v, "kind").get<std::string>());
  s.alpha = AlphaFromJson(Field(v, "alpha"));
  s.opt = RationalFromJson(Field(v, "opt"));
  s.lexopt = RationalFromJson(Field(v, "lexopt"));
  s.ratio = RationalFromJson(Field(v, "ratio"));
  s.passed = Field(v, "passed").get<bool>();
  s.chain_steps = Field(v, "chain_steps").get<int>();
  s.chain_passed = Field(v, "chain_passed").get<bool>();
  s.vice_versa_failure_witnessed =
      Field(v, "vice_versa_failure_witnessed").get<bool>();
  return s;
}

}  // namespace

Json RationalToJson(const Rational& value) { return FormatRational(value); }

Rational RationalFromJson(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) {
    return ParseRational(value.dump());
  }
  Fail("expected an exact rational string, got " + value.dump());
}

Json AlphaToJson(const Alpha& alpha) {
  return alpha.is_finite() ? RationalToJson(alpha.value()) : Json("inf");
}

Alpha AlphaFromJson(const Json& value) {
  if (value.is_string() && value.get<std::string>() == "inf") {
    return Alpha::Infinite();
  }
  return Alpha::Finite(RationalFromJson(value));
}

Json MatroidToJson(const Matroid& matroid) {
  Json out;
  if (const auto* m = dynamic_cast<const UniformMatroid*>(&matroid)) {
    out["type"] = "uniform";
    out["rank"] = m->rank();
  } else if (const auto* m = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    out["type"] = "partition";
    out["blocks"] = m->blocks();
    out["capacities"] = m->capacities();
  } else if (const auto* m = dynamic_cast<const GraphicMatroid*>(&matroid)) {
    out["type"] = "graphic";
    out["vertex_count"] = m->vertex_count();
    Json edges = Json::array();
    for (const auto& [u, v] : m->edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
  } else if (const auto* m = dynamic_cast<const LinearMatroid*>(&matroid)) {
    out["type"] = "linear";
    Json rows = Json::array();
    for (const auto& row : m->rows()) {
      Json r = Json::array();
      for (const Rational& q : row) r.push_back(RationalToJson(q));
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
  } else if (const auto* m = dynamic_cast<const ExplicitMatroid*>(&matroid)) {
    out["type"] = "explicit";
    out["independent_sets"] = m->independent_sets();
  } else {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "matroid kind '" + std::string(matroid.kind()) +
                          "' has no file representation");
  }
  return out;
}

MatroidPtr MatroidFromJson(const Json& value, int ground_size) {
  return Guard([&]() -> MatroidPtr {
    const std::string type = Field(value, "type").get<std::string>();
    MatroidPtr m;
    if (type == "uniform") {
      m = std::make_shared<const UniformMatroid>(
          ground_size, Field(value, "rank").get<int>());
    } else if (type == "partition") {
      std::vector<ElementSet> blocks;
      for (const Json& b : Field(value, "blocks"))
        blocks.push_back(SetFromJson(b));
      m = std::make_shared<const PartitionMatroid>(
          ground_size, std::move(blocks),
          Field(value, "capacities").get<std::vector<int>>());
    } else if (type == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const Json& e : Field(value, "edges")) {
        if (!e.is_array() || e.size() != 2) Fail("graphic edge must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      m = std::make_shared<const GraphicMatroid>(
          Field(value, "vertex_count").get<int>(), std::move(edges));
    } else if (type == "linear") {
      std::vector<std::vector<Rational>> rows;
      for (const Json& r : Field(value, "rows")) {
        std::vector<Rational> row;
        for (const Json& q : r) row.push_back(RationalFromJson(q));
        rows.push_back(std::move(row));
      }
      m = std::make_shared<const LinearMatroid>(std::move(rows));
    } else if (type == "explicit") {
      std::vector<ElementSet> family;
      for (const Json& s : Field(value, "independent_sets")) {
        family.push_back(SetFromJson(s));
      }
      m = std::make_shared<const ExplicitMatroid>(ground_size,
                                                  std::move(family));
    } else {
      Fail("unknown matroid type '" + type + "'");
    }
    if (m->ground_size() != ground_size) {
      Fail(type + " matroid has " + std::to_string(m->ground_size()) +
           " elements, instance has " + std::to_string(ground_size));
    }
    return m;
  });
}

Json InstanceToJson(const Instance& instance) {
  Json out;
  out["kind"] = KindName(instance.kind());
  out["seed"] = instance.seed;
  out["metadata"] = Json::object();
  for (const auto& [key, value] : instance.metadata)
    out["metadata"][key] = value;
  if (const auto* g = std::get_if<WeightedGraph>(&instance.problem)) {
    out["vertex_count"] = g->vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g->edges()) {
      Json edge;
      edge["u"] = e.u;
      edge["v"] = e.v;
      edge["w"] = RationalToJson(e.weight);
      edges.push_back(std::move(edge));
    }
    out["edges"] = std::move(edges);
  } else {
    const auto& p = std::get<MatroidPair>(instance.problem);
    out["ground_size"] = p.weights.size();
    out["matroid1"] = MatroidToJson(*p.first);
    out["matroid2"] = MatroidToJson(*p.second);
    Json weights = Json::object();
    for (size_t e = 0; e < p.weights.size(); ++e) {
      weights[std::to_string(e)] = RationalToJson(p.weights[e]);
    }
    out["weights"] = std::move(weights);
  }
  return out;
}

Instance InstanceFromJson(const Json& value) {
  return Guard([&] {
    Instance instance;
    const InstanceKind kind =
        KindFromName(Field(value, "kind").get<std::string>());
    if (value.contains("seed"))
      instance.seed = value["seed"].get<std::uint64_t>();
    if (value.contains("metadata")) {
      for (const auto& [key, v] : value["metadata"].items()) {
        instance.metadata[key] =
            v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    if (kind == InstanceKind::kMatching) {
      std::vector<Edge> edges;
      for (const Json& e : Field(value, "edges")) {
        edges.push_back(Edge{Field(e, "u").get<int>(), Field(e, "v").get<int>(),
                             RationalFromJson(Field(e, "w"))});
      }
      instance.problem = WeightedGraph(Field(value, "vertex_count").get<int>(),
                                       std::move(edges));
    } else {
      const Json& weights = Field(value, "weights");
      if (!weights.is_object())
        Fail("weights must map element ids to rationals");
      const int n = value.contains("ground_size")
                        ? value["ground_size"].get<int>()
                        : static_cast<int>(weights.size());
      if (static_cast<int>(weights.size()) != n) {
        Fail("weights must cover element ids 0.." + std::to_string(n - 1));
      }
      MatroidPair pair;
      pair.weights.resize(n);
      std::vector<bool> seen(n, false);
      for (const auto& [key, w] : weights.items()) {
        size_t used = 0;
        int id = -1;
        try {
          id = std::stoi(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || id < 0 || id >= n || seen[id]) {
          Fail("bad element id '" + key + "'");
        }
        seen[id] = true;
        pair.weights[id] = RationalFromJson(w);
      }
      pair.first = MatroidFromJson(Field(value, "matroid1"), n);
      pair.second = MatroidFromJson(Field(value, "matroid2"), n);
      instance.problem = std::move(pair);
    }
    ValidateInstance(instance);
    return instance;
  });
}

Json SolutionToJson(const Solution& solution, Objective objective) {
  Json out;
  out["objective"] =
      objective == Objective::kMaxWeight ? "max-weight" : "lex-max";
  out["solution"] = SetToJson(solution.elements);
  out["weight"] = RationalToJson(solution.weight);
  out["signature"] = SignatureToJson(solution.signature);
  return out;
}

Json VerificationReportToJson(const VerificationReport& r) {
  Json out;
  out["alpha"] = AlphaToJson(r.alpha);
  out["regime"] = r.regime == Regime::kBound ? "bound" : "equivalence";
  out["opt"] = RationalToJson(r.opt);
  out["lexopt"] = RationalToJson(r.lexopt);
  out["ratio"] = RationalToJson(r.ratio);
  out["bound"] = OptionalRational(r.bound);
  out["passed"] = r.passed;
  out["oracle_checked"] = r.oracle_checked;
  out["vice_versa_checked"] = r.vice_versa_checked;
  out["vice_versa_holds"] =
      r.vice_versa_holds ? Json(*r.vice_versa_holds) : Json(nullptr);
  out["max_weight_optima"] = r.max_weight_optima;
  out["opt_solution"] = SetToJson(r.opt_solution);
  out["lexopt_solution"] = SetToJson(r.lexopt_solution);
  out["lex_signature"] = SignatureToJson(r.lex_signature);
  out["non_lex_maximal_optimum"] = r.non_lex_maximal_optimum
                                       ? SetToJson(*r.non_lex_maximal_optimum)
                                       : Json(nullptr);
  if (r.counterexample) {
    out["counterexample"] = {
        {"max_weight", SetToJson(r.counterexample->first)},
        {"lex_maximal", SetToJson(r.counterexample->second)}};
  } else {
    out["counterexample"] = nullptr;
  }
  out["notes"] = r.notes;
  return out;
}

VerificationReport VerificationReportFromJson(const Json& v) {
  return Guard([&] {
    VerificationReport r;
    r.alpha = AlphaFromJson(Field(v, "alpha"));
    const std::string regime = Field(v, "regime").get<std::string>();
    if (regime != "bound" && regime != "equivalence") Fail("bad regime");
    r.regime = regime == "bound" ? Regime::kBound : Regime::kEquivalence;
    r.opt = RationalFromJson(Field(v, "opt"));
    r.lexopt = RationalFromJson(Field(v, "lexopt"));
    r.ratio = RationalFromJson(Field(v, "ratio"));
    r.bound = OptionalRationalFromJson(Field(v, "bound"));
    r.passed = Field(v, "passed").get<bool>();
    r.oracle_checked = Field(v, "oracle_checked").get<bool>();
    r.vice_versa_checked = Field(v, "vice_versa_checked").get<bool>();
    const Json& holds = Field(v, "vice_versa_holds");
    if (!holds.is_null()) r.vice_versa_holds = holds.get<bool>();
    r.max_weight_optima = Field(v, "max_weight_optima").get<int>();
    r.opt_solution = SetFromJson(Field(v, "opt_solution"));
    r.lexopt_solution = SetFromJson(Field(v, "lexopt_solution"));
    r.lex_signature = SignatureFromJson(Field(v, "lex_signature"));
    const Json& witness = Field(v, "non_lex_maximal_optimum");
    if (!witness.is_null()) r.non_lex_maximal_optimum = SetFromJson(witness);
    const Json& counter = Field(v, "counterexample");
    if (!counter.is_null()) {
      r.counterexample = {SetFromJson(Field(counter, "max_weight")),
                          SetFromJson(Field(counter, "lex_maximal"))};
    }
    r.notes = Field(v, "notes").get<std::vector<std::string>>();
    return r;
  });
}

Json ChainReportToJson(const ChainReport& r) {
  Json out;
  out["start"] = SetToJson(r.start);
  out["end"] = SetToJson(r.end);
  out["start_weight"] = RationalToJson(r.start_weight);
  out["end_weight"] = RationalToJson(r.end_weight);
  out["lexopt"] = RationalToJson(r.lexopt);
  Json steps = Json::array();
  for (const ChainStep& s : r.steps) {
    Json step;
    step["index"] = s.index;
    step["before"] = SetToJson(s.before);
    step["after"] = SetToJson(s.after);
    step["removed"] = SetToJson(s.removed);
    step["weight_before"] = RationalToJson(s.weight_before);
    step["weight_after"] = RationalToJson(s.weight_after);
    step["eligible"] = s.eligible;
    step["step_bound"] = s.step_bound;
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["indices_nondecreasing"] = r.indices_nondecreasing;
  out["step_counts_within_bound"] = r.step_counts_within_bound;
  out["terminal_lex_maximal"] = r.terminal_lex_maximal;
  out["terminal_weight_is_lexopt"] = r.terminal_weight_is_lexopt;
  out["telescoped_bound"] = r.telescoped_bound;
  out["passed"] = r.passed;
  return out;
}

ChainReport ChainReportFromJson(const Json& v) {
  return Guard([&] {
    ChainReport r;
    r.start = SetFromJson(Field(v, "start"));
    r.end = SetFromJson(Field(v, "end"));
    r.start_weight = RationalFromJson(Field(v, "start_weight"));
    r.end_weight = RationalFromJson(Field(v, "end_weight"));
    r.lexopt = RationalFromJson(Field(v, "lexopt"));
    for (const Json& s : Field(v, "steps")) {
      ChainStep step;
      step.index = Field(s, "index").get<int>();
      step.before = SetFromJson(Field(s, "before"));
      step.after = SetFromJson(Field(s, "after"));
      step.removed = SetFromJson(Field(s, "removed"));
      step.weight_before = RationalFromJson(Field(s, "weight_before"));
      step.weight_after = RationalFromJson(Field(s, "weight_after"));
      step.eligible = Field(s, "eligible").get<bool>();
      step.step_bound = Field(s, "step_bound").get<bool>();
      r.steps.push_back(std::move(step));
    }
    r.indices_nondecreasing = Field(v, "indices_nondecreasing").get<bool>();
    r.step_counts_within_bound =
        Field(v, "step_counts_within_bound").get<bool>();
    r.terminal_lex_maximal = Field(v, "terminal_lex_maximal").get<bool>();
    r.terminal_weight_is_lexopt =
        Field(v, "terminal_weight_is_lexopt").get<bool>();
    r.telescoped_bound = Field(v, "telescoped_bound").get<bool>();
    r.passed = Field(v, "passed").get<bool>();
    return r;
  });
}

Json GeneratorParamsToJson(const GeneratorParams& p) {
  Json out;
  out["kind"] = KindName(p.kind);
  out["seed"] = p.seed;
  out["k_min"] = p.k_min;
  out["k_max"] = p.k_max;
  out["alpha_min"] = RationalToJson(p.alpha_min);
  out["alpha_max"] = p.alpha_max ? RationalToJson(*p.alpha_max) : Json("inf");
  out["min_vertices"] = p.min_vertices;
  out["max_vertices"] = p.max_vertices;
  out["max_edges"] = p.max_edges;
  out["min_ground"] = p.min_ground;
  out["max_ground"] = p.max_ground;
  return out;
}

GeneratorParams GeneratorParamsFromJson(const Json& v) {
  return Guard([&] {
    GeneratorParams p;
    if (!v.is_object()) Fail("generator parameters must be an object");
    p.kind = KindFromName(Field(v, "kind").get<std::string>());
    p.seed = v.value("seed", std::uint64_t{0});
    p.k_min = v.value("k_min", p.k_min);
    p.k_max = v.value("k_max", p.k_max);
    if (v.contains("k")) p.k_min = p.k_max = v["k"].get<int>();
    if (v.contains("alpha_min")) p.alpha_min = RationalFromJson(v["alpha_min"]);
    if (v.contains("alpha_max")) {
      const Json& a = v["alpha_max"];
      if (a.is_string() && a.get<std::string>() == "inf") {
        p.alpha_max.reset();
      } else {
        p.alpha_max = RationalFromJson(a);
      }
    }
    p.min_vertices = v.value("min_vertices", p.min_vertices);
    p.max_vertices = v.value("max_vertices", p.max_vertices);
    p.max_edges = v.value("max_edges", p.max_edges);
    p.min_ground = v.value("min_ground", p.min_ground);
    p.max_ground = v.value("max_ground", p.max_ground);
    return p;
  });
}

Json SweepConfigToJson(const SweepConfig& config) {
  Json out;
  Json batches = Json::array();
  for (const SweepBatch& b : config.batches) {
    Json batch = GeneratorParamsToJson(b.params);
    batch["count"] = b.count;
    batch["chain"] = b.chain;
    batch["vice_versa"] = b.vice_versa;
    batches.push_back(std::move(batch));
  }
  out["batches"] = std::move(batches);
  Json tightness = Json::array();
  for (const Rational& x : config.tightness)
    tightness.push_back(RationalToJson(x));
  out["tightness"] = std::move(tightness);
  return out;
}

SweepConfig SweepConfigFromJson(const Json& v) {
  return Guard([&] {
    SweepConfig config;
    if (!v.is_object()) Fail("sweep config must be an object");
    if (v.contains("batches")) {
      for (const Json& b : v["batches"]) {
        SweepBatch batch;
        batch.params = GeneratorParamsFromJson(b);
        batch.count = Field(b, "count").get<int>();
        if (batch.count < 0) Fail("negative batch count");
        batch.chain = b.value("chain", true);
        batch.vice_versa = b.value("vice_versa", true);
        config.batches.push_back(std::move(batch));
      }
    }
    if (v.contains("tightness")) {
      for (const Json& x : v["tightness"]) {
        config.tightness.push_back(RationalFromJson(x));
      }
    }
    return config;
  });
}

Json SweepReportToJson(const SweepReport& report) {
  Json out;
  out["total"] = report.total;
  out["passed"] = report.passed;
  out["all_passed"] = report.all_passed();
  Json buckets = Json::array();
  for (const BucketStats& b : report.buckets)
    buckets.push_back(BucketToJson(b));
  out["buckets"] = std::move(buckets);
  Json instances = Json::array();
  for (const InstanceSummary& s : report.instances) {
    instances.push_back(SummaryToJson(s));
  }
  out["instances"] = std::move(instances);
  Json failures = Json::array();
  for (const SweepFailure& f : report.failures) {
    Json failure;
    failure["instance"] = InstanceToJson(f.instance);
    failure["verification"] = VerificationReportToJson(f.verification);
    failure["chain"] = f.chain ? ChainReportToJson(*f.chain) : Json(nullptr);
    failure["error"] = f.error;
    failures.push_back(std::move(failure));
  }
  out["failures"] = std::move(failures);
  return out;
}

SweepReport SweepReportFromJson(const Json& v) {
  return Guard([&] {
    SweepReport report;
    report.total = Field(v, "total").get<int>();
    report.passed = Field(v, "passed").get<int>();
    for (const Json& b : Field(v, "buckets")) {
      report.buckets.push_back(BucketFromJson(b));
    }
    for (const Json& s : Field(v, "instances")) {
      report.instances.push_back(SummaryFromJson(s));
    }
    for (const Json& f : Field(v, "failures")) {
      SweepFailure failure{InstanceFromJson(Field(f, "instance")),
                           VerificationReportFromJson(Field(f, "verification")),
                           std::nullopt, Field(f, "error").get<std::string>()};
      if (!Field(f, "chain").is_null()) {
        failure.chain = ChainReportFromJson(f["chain"]);
      }
      report.failures.push_back(std::move(failure));
    }
    return report;
  });
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    Fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string DumpJson(const Json& value) { return value.dump(2) + "\n"; }

void WriteJsonFile(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) {
    throw LexoptError(ErrorCode::kInvalidParameter,
                      "cannot write '" + path + "'");
  }
  out << DumpJson(value);
}

}  // namespace lexopt
