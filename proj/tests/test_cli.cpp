// Copyright 2026 The sykq Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sykq/experiments.hpp"

namespace {

using namespace sykq;
namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SYKQ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "sykq_cli_test";
  fs::create_directories(d);
  return d / name;
}

TEST(Cli, VersionAndUsage) {
  const CliResult v = run_cli("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("sykq 1.0.0"), std::string::npos);
  EXPECT_EQ(run_cli("").code, 1);
  EXPECT_EQ(run_cli("resources --bogus").code, 1);
  EXPECT_EQ(run_cli("encode-check --mode sorted").code, 1);
}

TEST(Cli, ConfigErrorsExitOne) {
  EXPECT_EQ(run_cli("encode-check --n 6 --mode all-tuples").code, 1);
  EXPECT_EQ(run_cli("encode-check --epsilon 2").code, 1);
  EXPECT_EQ(run_cli("encode-check --n 16").code, 1);
  EXPECT_EQ(run_cli("encode-check --select gates").code, 1);
  EXPECT_EQ(run_cli("resources --config /nonexistent/file.json").code, 1);
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"n": 4, "colour": "red"})";
  EXPECT_EQ(run_cli("encode-check --config " + bad.string()).code, 1);
  std::ofstream(bad) << R"({"command": "resources"})";
  EXPECT_EQ(run_cli("encode-check --config " + bad.string()).code, 1);
}

TEST(Cli, ToleranceFailureExitsTwo) {
  // Depth one is far from Gaussian.
  const CliResult r = run_cli("amplitudes --index-qubits 6 --depth 1 --seeds 2 --no-timestamp");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["pass"], false);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const std::string args : {"resources --no-timestamp", "encode-check --n 6 --prep random --seeds 2 --no-timestamp",
                                 "evolve --n 4 --format csv --no-timestamp"}) {
    const CliResult a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, TimestampOnlyWhenAsked) {
  const json with = json::parse(run_cli("bessel-table --n-max 4 --grid 1").out);
  const json without = json::parse(run_cli("bessel-table --n-max 4 --grid 1 --no-timestamp").out);
  EXPECT_TRUE(with.contains("timestamp"));
  EXPECT_FALSE(without.contains("timestamp"));
  EXPECT_EQ(without["version"], "sykq 1.0.0");
  EXPECT_EQ(without["command"], "bessel-table");
}

TEST(Cli, FlagsOverrideConfigFile) {
  const fs::path cfg = scratch("walk.json");
  std::ofstream(cfg) << R"({"n": 6, "seed": 9, "n_max": 3, "m_max": 1, "no_timestamp": true})";
  const json a = json::parse(run_cli("walk-check --config " + cfg.string()).out);
  EXPECT_EQ(a["config"]["n"], 6);
  EXPECT_EQ(a["config"]["seed"], 9);
  EXPECT_EQ(a["results"][0]["chebyshev"].size(), 4u);
  const json b = json::parse(run_cli("walk-check --config " + cfg.string() + " --n 4 --seed 2").out);
  EXPECT_EQ(b["config"]["n"], 4);
  EXPECT_EQ(b["config"]["seed"], 2);
  EXPECT_EQ(b["config"]["m_max"], 1);
  EXPECT_EQ(b["pass"], true);
}

TEST(Cli, CsvAndOutputFile) {
  const fs::path out = scratch("res.csv");
  fs::remove(out);
  const CliResult r = run_cli("resources --grid 4,8 --eps-grid 1e-3 --format csv --no-timestamp --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("# sykq 1.0.0 resources\n# config ", 0), 0u);
  EXPECT_NE(text.find("\nN,Jt,epsilon,t_select,queries,leading_T,ancillas,lambda_est,total_cost\n"), std::string::npos);
  EXPECT_NE(text.find("\n4,1,0.001,48,"), std::string::npos);
  EXPECT_EQ(text.find("# timestamp"), std::string::npos);
}

TEST(Config, MergeAndValidate) {
  ExperimentConfig c;
  c.command = "evolve";
  config_merge_json(c, json::parse(R"({"n": 6, "tau": 5, "eps_grid": [1e-4], "prep": "random"})"));
  EXPECT_EQ(c.n, 6);
  ASSERT_TRUE(c.tau.has_value());
  EXPECT_EQ(*c.tau, 5.0);
  EXPECT_NO_THROW(validate_config(c));
  EXPECT_THROW(config_merge_json(c, json::parse(R"({"n": "six"})")), ConfigError);
  EXPECT_THROW(config_merge_json(c, json::parse("[1, 2]")), ConfigError);
  c.command = "nope";
  EXPECT_THROW(validate_config(c), ConfigError);
  c.command = "evolve";
  c.eps_grid = {0.5};
  EXPECT_THROW(validate_config(c), ConfigError);
}

TEST(Report, JsonTextIsSortedWithFullPrecision) {
  json j;
  j["zeta"] = 0.1;
  j["alpha"] = {1, 2, 3};
  j["mid"] = {{"b", true}, {"a", nullptr}};
  const std::string s = to_json_text(j);
  EXPECT_LT(s.find("\"alpha\""), s.find("\"mid\""));
  EXPECT_LT(s.find("\"mid\""), s.find("\"zeta\""));
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(s.find("[1, 2, 3]"), std::string::npos);
  EXPECT_EQ(json::parse(s)["zeta"].get<double>(), 0.1);
  EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
}

}  // namespace
