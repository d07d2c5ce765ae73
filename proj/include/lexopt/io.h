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

#ifndef LEXOPT_IO_H_
#define LEXOPT_IO_H_

#include <string>

#include "json.hpp"
#include "lexopt/harness.h"

namespace lexopt {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "n" or "n/d" strings; JSON integers are accepted on
// input, floating-point numbers are rejected.
Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& value);

Json AlphaToJson(const Alpha& alpha);
Alpha AlphaFromJson(const Json& value);

Json MatroidToJson(const Matroid& matroid);
MatroidPtr MatroidFromJson(const Json& value, int ground_size);

Json InstanceToJson(const Instance& instance);
// Throws kParseError on malformed documents and the usual validation
// errors on inconsistent ones.
Instance InstanceFromJson(const Json& value);

Json SolutionToJson(const Solution& solution, Objective objective);

Json VerificationReportToJson(const VerificationReport& report);
VerificationReport VerificationReportFromJson(const Json& value);

Json ChainReportToJson(const ChainReport& report);
ChainReport ChainReportFromJson(const Json& value);

Json GeneratorParamsToJson(const GeneratorParams& params);
GeneratorParams GeneratorParamsFromJson(const Json& value);

Json SweepConfigToJson(const SweepConfig& config);
SweepConfig SweepConfigFromJson(const Json& value);

Json SweepReportToJson(const SweepReport& report);
SweepReport SweepReportFromJson(const Json& value);

// Throws kParseError when the file is unreadable or not JSON.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& value);
std::string DumpJson(const Json& value);

}  // namespace lexopt

#endif  // LEXOPT_IO_H_
