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

// Command-line driver: solve, verify, gen and sweep.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lexopt/error.h"
#include "lexopt/harness.h"
#include "lexopt/io.h"

namespace lexopt {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSolverError = 3;

// Errors raised while reading input map to kExitBadInput.
struct InputError {
  std::string message;
};

Instance LoadInstance(const std::string& path) {
  try {
    Instance instance = InstanceFromJson(ReadJsonFile(path));
    ValidateInstance(instance);
    return instance;
  } catch (const LexoptError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

void Emit(const std::string& output, const Json& value) {
  if (output.empty()) {
    std::cout << DumpJson(value);
  } else {
    WriteJsonFile(output, value);
  }
}

struct GenFlags {
  std::string kind = "matching";
  std::uint64_t seed = 0;
  std::optional<int> k;
  std::string alpha_min;
  std::string alpha_max;

  void Register(CLI::App* app) {
    app->add_option("--kind", kind, "matching or intersection")
        ->check(CLI::IsMember({"matching", "intersection"}));
    app->add_option("--seed", seed, "Generator seed");
    app->add_option("--k", k, "Number of weight classes");
    app->add_option("--alpha-min", alpha_min,
                    "Smallest level ratio, e.g. 11/10");
    app->add_option("--alpha-max", alpha_max, "Largest level ratio or 'inf'");
  }

  GeneratorParams Params() const {
    GeneratorParams p;
    try {
      p.kind = kind == "matching" ? InstanceKind::kMatching
                                  : InstanceKind::kIntersection;
      p.seed = seed;
      if (k) p.k_min = p.k_max = *k;
      if (!alpha_min.empty()) p.alpha_min = ParseRational(alpha_min);
      if (alpha_max == "inf") {
        p.alpha_max.reset();
      } else if (!alpha_max.empty()) {
        p.alpha_max = ParseRational(alpha_max);
      }
    } catch (const LexoptError& e) {
      throw InputError{e.what()};
    }
    return p;
  }
};

int RunSolve(const std::string& input, const std::string& objective,
             const std::string& output) {
  const Instance instance = LoadInstance(input);
  const Objective obj =
      objective == "lex-max" ? Objective::kLexMax : Objective::kMaxWeight;
  Emit(output, SolutionToJson(Solve(instance, obj), obj));
  return kExitOk;
}

int RunVerify(const std::string& input, bool gen, const GenFlags& flags,
              bool chain, bool vice_versa, const std::string& output) {
  Instance instance;
  if (gen) {
    try {
      instance = GenerateInstance(flags.Params());
    } catch (const LexoptError& e) {
      throw InputError{e.what()};
    }
  } else {
    instance = LoadInstance(input);
  }
  const VerificationReport report = VerifyBound(instance, {vice_versa});
  Json out;
  out["seed"] = instance.seed;
  out["verification"] = VerificationReportToJson(report);
  bool passed = report.passed;
  if (chain) {
    const ChainReport c = EligibleChain(instance);
    out["chain"] = ChainReportToJson(c);
    passed = passed && c.passed;
  }
  if (gen) out["instance"] = InstanceToJson(instance);
  Emit(output, out);
  if (!passed) {
    std::cerr << "verification failed\n";
    for (const std::string& note : report.notes)
      std::cerr << "  " << note << "\n";
    if (report.counterexample) {
      std::cerr << "  counterexample: "
                << Json(report.counterexample->first).dump() << " vs "
                << Json(report.counterexample->second).dump() << "\n";
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

int RunGen(const GenFlags& flags, int count, const std::string& out_dir) {
  if (count < 0) throw InputError{"--count must be non-negative"};
  const GeneratorParams base = flags.Params();
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    GeneratorParams p = base;
    p.seed = DeriveSeed(base.seed, static_cast<std::uint64_t>(i));
    Instance instance;
    try {
      instance = GenerateInstance(p);
    } catch (const LexoptError& e) {
      throw InputError{e.what()};
    }
    char name[32];
    std::snprintf(name, sizeof(name), "instance_%05d.json", i);
    WriteJsonFile((std::filesystem::path(out_dir) / name).string(),
                  InstanceToJson(instance));
  }
  return kExitOk;
}

int RunSweep(const std::string& config_path, const std::string& output) {
  SweepConfig config;
  try {
    config = SweepConfigFromJson(ReadJsonFile(config_path));
  } catch (const LexoptError& e) {
    throw InputError{config_path + ": " + e.what()};
  }
  const SweepReport report = Sweep(config);
  Emit(output, SweepReportToJson(report));
  for (const BucketStats& b : report.buckets) {
    std::cerr << b.label << ": " << b.passed << "/" << b.instances
              << " passed, min ratio "
              << (b.min_ratio ? FormatRational(*b.min_ratio) : "-") << "\n";
  }
  if (!report.all_passed()) {
    std::cerr << report.total - report.passed << " of " << report.total
              << " instances failed\n";
    for (const SweepFailure& f : report.failures) {
      std::cerr << DumpJson(InstanceToJson(f.instance));
      if (!f.error.empty()) std::cerr << "  error: " << f.error << "\n";
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace
}  // namespace lexopt

int main(int argc, char** argv) {
  using namespace lexopt;
  CLI::App app{
      "Lex-maximal versus maximum-weight solutions for matching and "
      "matroid intersection"};
  app.require_subcommand(1);

  std::string input, output, objective = "max-weight", out_dir = ".";
  bool chain = false, vice_versa = false, gen = false;
  int count = 1;
  GenFlags flags;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("input", input, "Instance file")->required();
  solve->add_option("--objective", objective)
      ->check(CLI::IsMember({"max-weight", "lex-max"}));
  solve->add_option("-o,--output", output, "Write JSON here instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "Check the bound on one instance");
  verify->add_option("input", input, "Instance file");
  verify->add_flag("--gen", gen, "Generate the instance from the flags below");
  flags.Register(verify);
  verify->add_flag("--chain", chain, "Also trace an eligible chain");
  verify->add_flag("--vice-versa", vice_versa,
                   "Enumerate all maximum-weight optima");
  verify->add_option("-o,--output", output);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Write random instance files");
  GenFlags gen_flags;
  gen_flags.Register(gen_cmd);
  gen_cmd->add_option("--count", count);
  gen_cmd->add_option("--out-dir", out_dir);

  CLI::App* sweep = app.add_subcommand("sweep", "Run a sweep configuration");
  std::string config;
  sweep->add_option("config", config, "Sweep configuration file")->required();
  sweep->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*solve) return RunSolve(input, objective, output);
    if (*verify) {
      if (gen == !input.empty()) {
        std::cerr << "verify needs exactly one of an input file or --gen\n";
        return kExitBadInput;
      }
      return RunVerify(input, gen, flags, chain, vice_versa, output);
    }
    if (*gen_cmd) return RunGen(gen_flags, count, out_dir);
    if (*sweep) return RunSweep(config, output);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitBadInput;
  } catch (const LexoptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParseError ? kExitBadInput
                                              : kExitSolverError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitOk;
}
