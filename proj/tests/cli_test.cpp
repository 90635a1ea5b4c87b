// Copyright 2026 The qldi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "test_support.hpp"

namespace qldi {
namespace {

using json = nlohmann::ordered_json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return testing::fixture_path(name); }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("qldi_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, ValidateOk) {
  const auto r = run({"validate", fixture("six_qubit.code")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[[6,1,3]]_2"), std::string::npos);
}

TEST(Cli, ValidateGarbageNamesViolation) {
  const auto path = temp_file("garbage.code", "n=2 k=0 q=3\nx: 1 1 ; z: 0 0\nx: 0 0 ; z: 1 1\n");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("do not commute"), std::string::npos) << r.err;
}

TEST(Cli, LdiJsonIsReferenceMatrix) {
  const auto r = run({"ldi", fixture("six_qubit.code"), "--variant", "full", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tableau"], json::parse(R"([[1,0,0,0,0,1,1,0,1,1,0,1],
                                          [0,1,0,0,0,1,1,1,1,0,0,0],
                                          [0,0,1,0,0,0,1,1,1,1,0,0],
                                          [0,0,0,1,0,0,0,-1,1,0,0,1],
                                          [0,0,0,0,1,0,0,0,0,0,0,0]])"));
  EXPECT_EQ(j["B"], 1);
}

TEST(Cli, GlobalJsonBeforeSubcommand) {
  const auto a = run({"--json", "bounds", fixture("six_qubit.code")});
  const auto b = run({"bounds", fixture("six_qubit.code"), "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BoundsSixQubit) {
  const auto r = run({"bounds", fixture("six_qubit.code"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["p_d_star"], "4096");
  EXPECT_EQ(j["first_safe_prime"], "4099");
  EXPECT_EQ(j["degenerate"], true);
  EXPECT_TRUE(j["p_double_star"].is_null());
  const auto text = run({"bounds", fixture("six_qubit.code")});
  EXPECT_NE(text.out.find("4096"), std::string::npos);
  EXPECT_NE(text.out.find("4099"), std::string::npos);
}

TEST(Cli, BoundsStrictReadingNamed) {
  const auto r = run({"bounds", fixture("six_qubit.code"), "--strict-reading", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["reading"], "strict");
}

TEST(Cli, BoundsNeedDeclaredDistance) {
  const auto path = temp_file("nod.code", "n=2 k=0 q=2\nXX\nZZ\n");
  EXPECT_EQ(run({"bounds", path}).code, 1);
  EXPECT_EQ(run({"scan", path, "--primes", "2..3"}).code, 1);
}

TEST(Cli, CanonWritesReplayableScript) {
  const auto script = std::filesystem::temp_directory_path() / "qldi_cli_test_canon.script";
  const auto c = run({"canon", fixture("six_qubit.code"), "--script", script.string(), "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto r = run({"replay", fixture("six_qubit.code"), script.string(), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["tableau"], json::parse(c.out)["tableau"]);
}

TEST(Cli, ReplayHandScript) {
  const auto r = run({"replay", fixture("six_qubit.code"), fixture("six_qubit_paper.script")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 0 0 1 0 0 | 0 1 1 0 0 1"), std::string::npos) << r.out;
}

TEST(Cli, DistanceWithOracle) {
  const auto r = run({"distance", fixture("six_qubit.code"), "-p", "3", "-w", "3", "--oracle", "--classify", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["distance"], 3);
  EXPECT_EQ(j["oracle_agrees"], true);
}

TEST(Cli, DistanceAboveCutoff) {
  const auto r = run({"distance", fixture("six_qubit.code"), "-p", "4099", "-w", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["distance"], ">2");
}

TEST(Cli, ScanFiveQubit) {
  const auto r = run({"scan", fixture("five_qubit.code"), "--primes", "2..5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 3u);
  for (const auto& rep : j["reports"]) {
    EXPECT_EQ(rep["distance"], 3);
    EXPECT_EQ(rep["degenerate"], false);
    EXPECT_EQ(rep["preserves_distance"], true);
  }
}

TEST(Cli, RepeatedRunsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"scan", fixture("six_qubit.code"), "--primes", "3..13", "--json"},
           {"distance", fixture("five_qubit.code"), "-p", "5", "--json"},
           {"canon", fixture("five_qubit.code"), "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, UsageErrors) {
  const auto unknown = run({"ldi", fixture("six_qubit.code"), "--frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"explode"}).code, 2);
  EXPECT_EQ(run({"distance", fixture("six_qubit.code"), "-p", "4"}).code, 2);
  EXPECT_EQ(run({"scan", fixture("six_qubit.code"), "--primes", "9..3"}).code, 2);
  EXPECT_EQ(run({"ldi", fixture("six_qubit.code"), "--variant", "sideways"}).code, 2);
  EXPECT_EQ(run({"validate", "/nonexistent/file.code"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace qldi
