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

// Runs the lexopt binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lexopt/io.h"

namespace lexopt {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
};

RunResult Exec(const std::string& args) {
  const std::string cmd =
      std::string(LEXOPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    out.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("lexopt_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const Json& value) {
    const std::string path = (dir_ / name).string();
    WriteJsonFile(path, value);
    return path;
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveTightness) {
  const std::string path =
      Write("t.json", InstanceToJson(TightnessExample(Rational(3, 2))));
  const RunResult r = Exec("solve " + path + " --objective lex-max");
  EXPECT_EQ(r.code, 0);
  const Json out = Json::parse(r.out);
  EXPECT_EQ(out["solution"], Json::parse("[1]"));
  EXPECT_EQ(out["weight"], Json("3/2"));
}

TEST_F(CliTest, SolveMatchesLibrary) {
  for (int seed = 0; seed < 5; ++seed) {
    GeneratorParams p;
    p.kind = seed % 2 ? InstanceKind::kIntersection : InstanceKind::kMatching;
    p.seed = seed;
    const Instance inst = GenerateInstance(p);
    const std::string path = Write("r.json", InstanceToJson(inst));
    const std::string out = (dir_ / "out.json").string();
    ASSERT_EQ(Exec("solve " + path + " --output " + out).code, 0);
    EXPECT_EQ(Slurp(out),
              DumpJson(SolutionToJson(Solve(inst, Objective::kMaxWeight),
                                      Objective::kMaxWeight)));
  }
}

TEST_F(CliTest, EmptyGraph) {
  const std::string path =
      Write("e.json",
            Json::parse(R"({"kind":"matching","vertex_count":2,"edges":[]})"));
  const RunResult r = Exec("solve " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["weight"], Json("0"));
}

TEST_F(CliTest, CorruptedInputExitsTwo) {
  const std::string path = (dir_ / "bad.json").string();
  std::ofstream(path) << "{\"kind\": \"matching\", ";
  EXPECT_EQ(Exec("solve " + path).code, 2);
  EXPECT_EQ(Exec("verify " + path).code, 2);
  EXPECT_EQ(Exec("solve " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(Exec("solve").code, 2);
  EXPECT_EQ(
      Exec("gen --alpha-min 3 --alpha-max 2 --out-dir " + dir_.string()).code,
      2);
}

TEST_F(CliTest, VerifyViceVersaWitness) {
  const std::string path =
      Write("t2.json", InstanceToJson(TightnessExample(2)));
  const RunResult r = Exec("verify " + path + " --vice-versa --chain");
  EXPECT_EQ(r.code, 0);
  const Json out = Json::parse(r.out);
  EXPECT_EQ(out["verification"]["passed"], Json(true));
  EXPECT_EQ(out["verification"]["vice_versa_holds"], Json(false));
  EXPECT_EQ(out["chain"]["passed"], Json(true));
}

TEST_F(CliTest, VerifyGeneratedAboveTwo) {
  const RunResult r = Exec(
      "verify --gen --kind intersection --seed 5 --alpha-min 3 "
      "--alpha-max inf --vice-versa");
  EXPECT_EQ(r.code, 0);
  const Json v = Json::parse(r.out)["verification"];
  EXPECT_EQ(v["opt"], v["lexopt"]);
  EXPECT_EQ(v["vice_versa_holds"], Json(true));
}

TEST_F(CliTest, GenIsDeterministic) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  const std::string flags =
      "gen --kind intersection --seed 7 --count 4 --out-dir ";
  ASSERT_EQ(Exec(flags + a.string()).code, 0);
  ASSERT_EQ(Exec(flags + b.string()).code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    EXPECT_EQ(Slurp(entry.path()), Slurp(b / entry.path().filename()));
    const Instance inst = InstanceFromJson(ReadJsonFile(entry.path().string()));
    EXPECT_EQ(DumpJson(InstanceToJson(inst)), Slurp(entry.path()));
    ++files;
  }
  EXPECT_EQ(files, 4);
}

TEST_F(CliTest, GenExactAlphaTwo) {
  ASSERT_EQ(
      Exec("gen --seed 1 --count 10 --alpha-min 2 --alpha-max 2 --out-dir " +
           dir_.string())
          .code,
      0);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const Instance inst = InstanceFromJson(ReadJsonFile(entry.path().string()));
    EXPECT_EQ(ComputeAlpha(ComputeWeightClasses(inst.weights())),
              Alpha::Finite(2));
  }
}

TEST_F(CliTest, Sweep) {
  const std::string empty =
      Write("empty.json", Json::parse(R"({"batches": []})"));
  const RunResult r = Exec("sweep " + empty);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["total"], Json(0));

  const std::string tight = Write(
      "tight.json",
      Json::parse(
          R"({"batches": [], "tightness": ["11/10", "5/4", "3/2", "7/4", "2"]})"));
  const RunResult t = Exec("sweep " + tight);
  EXPECT_EQ(t.code, 0);
  for (const Json& s : Json::parse(t.out)["instances"]) {
    EXPECT_EQ(RationalFromJson(s["ratio"]),
              AlphaFromJson(s["alpha"]).value() / 2);
  }
}

TEST_F(CliTest, BundledConfigPasses) {
  const RunResult r = Exec(std::string("sweep ") + LEXOPT_SOURCE_DIR +
                           "/configs/default_sweep.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_GT(Json::parse(r.out)["total"].get<int>(), 0);
}

}  // namespace
}  // namespace lexopt
