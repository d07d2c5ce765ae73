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

// Python bindings. Rationals cross the boundary as strings ("n" or "n/d")
// and are converted to fractions.Fraction on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "lexopt/error.h"
#include "lexopt/harness.h"
#include "lexopt/io.h"

namespace py = pybind11;

namespace lexopt {
namespace {

using WeightList = std::vector<std::string>;

std::vector<Rational> ParseWeights(const WeightList& weights) {
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const std::string& w : weights) out.push_back(ParseRational(w));
  return out;
}

WeightedGraph MakeGraph(
    int vertex_count,
    const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<Edge> list;
  for (const auto& [u, v, w] : edges) list.push_back({u, v, ParseRational(w)});
  return WeightedGraph(vertex_count, std::move(list));
}

py::tuple MatchingTuple(const MatchingResult& r) {
  return py::make_tuple(r.edges, FormatRational(r.weight), r.signature.counts);
}

py::tuple IntersectionTuple(const IntersectionResult& r) {
  return py::make_tuple(r.elements, FormatRational(r.weight),
                        r.signature.counts);
}

MatroidPtr MatroidFromText(const std::string& text, int ground_size) {
  return MatroidFromJson(Json::parse(text), ground_size);
}

std::string SolveDocument(const std::string& instance,
                          const std::string& objective) {
  const Objective obj =
      objective == "lex-max" ? Objective::kLexMax : Objective::kMaxWeight;
  return SolutionToJson(Solve(InstanceFromJson(Json::parse(instance)), obj),
                        obj)
      .dump();
}

std::string VerifyDocument(const std::string& instance, bool vice_versa,
                           bool chain) {
  const Instance inst = InstanceFromJson(Json::parse(instance));
  Json out;
  out["verification"] =
      VerificationReportToJson(VerifyBound(inst, {vice_versa}));
  if (chain) out["chain"] = ChainReportToJson(EligibleChain(inst));
  return out.dump();
}

std::string Generate(const std::string& params) {
  return InstanceToJson(
             GenerateInstance(GeneratorParamsFromJson(Json::parse(params))))
      .dump();
}

std::string Tightness(const std::string& x) {
  return InstanceToJson(TightnessExample(ParseRational(x))).dump();
}

std::string RunSweep(const std::string& config) {
  return SweepReportToJson(Sweep(SweepConfigFromJson(Json::parse(config))))
      .dump();
}

}  // namespace
}  // namespace lexopt

PYBIND11_MODULE(_lexopt, m) {
  using namespace lexopt;
  m.doc() = "Exact lex-maximal and maximum-weight solvers";

  py::register_exception<LexoptError>(m, "LexoptError", PyExc_ValueError);

  py::class_<Matroid, std::shared_ptr<Matroid>>(m, "Matroid")
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def_property_readonly(
          "kind", [](const Matroid& self) { return std::string(self.kind()); })
      .def("is_independent",
           [](const Matroid& self, ElementSet s) {
             return IsIndependentChecked(self, MakeSet(std::move(s)));
           })
      .def("rank",
           [](const Matroid& self, ElementSet s) {
             return Rank(self, MakeSet(std::move(s)));
           })
      .def("span",
           [](const Matroid& self, ElementSet s) {
             return Span(self, MakeSet(std::move(s)));
           })
      .def("find_circuit",
           [](const Matroid& self, ElementSet s) {
             return FindCircuit(self, MakeSet(std::move(s)));
           })
      .def("verify_axioms", [](const Matroid& self) {
        const AxiomReport r = VerifyMatroidAxioms(self);
        return py::make_tuple(r.passed, r.violation);
      });

  m.def("_matroid", [](const std::string& descriptor, int ground_size) {
    return std::const_pointer_cast<Matroid>(
        MatroidFromText(descriptor, ground_size));
  });

  m.def("max_weight_matching",
        [](int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
          return MatchingTuple(MaxWeightMatching(MakeGraph(n, edges)));
        });
  m.def(
      "lex_maximal_matching",
      [](int n, const std::vector<std::tuple<int, int, std::string>>& edges,
         long base) {
        return MatchingTuple(LexMaximalMatching(MakeGraph(n, edges), base));
      },
      py::arg("vertex_count"), py::arg("edges"), py::arg("base") = 3);

  m.def("max_weight_common_independent",
        [](const Matroid& m1, const Matroid& m2, const WeightList& w) {
          return IntersectionTuple(
              MaxWeightCommonIndependent(m1, m2, ParseWeights(w)));
        });
  m.def(
      "lex_maximal_common_independent",
      [](const Matroid& m1, const Matroid& m2, const WeightList& w, long base) {
        return IntersectionTuple(
            LexMaximalCommonIndependent(m1, m2, ParseWeights(w), base));
      },
      py::arg("m1"), py::arg("m2"), py::arg("weights"), py::arg("base") = 3);

  m.def("alpha", [](const WeightList& w) {
    return AlphaToJson(ComputeAlpha(ComputeWeightClasses(ParseWeights(w))))
        .get<std::string>();
  });

  m.def("_solve", &SolveDocument);
  m.def("_verify", &VerifyDocument);
  m.def("_generate", &Generate);
  m.def("_tightness", &Tightness);
  m.def("_sweep", &RunSweep);
}
