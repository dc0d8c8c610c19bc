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

// Command line front end for the sykq experiments. Exit codes: 0 when every
// tolerance passes, 1 for usage or configuration errors, 2 when a tolerance
// check fails.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sykq/experiments.hpp"

namespace {

struct Flags {
  std::string config;
  int n = 0;
  double j = 0, t = 0, tau = 0, epsilon = 0;
  std::string mode, prep, select, out, format;
  int depth = 0, seeds = 0, index_qubits = 0, n_max = 0, m_max = 0;
  std::uint64_t seed = 0;
  std::vector<double> grid, eps_grid;
  bool no_timestamp = false;
};

struct Bound {
  std::map<std::string, CLI::Option*> opt;
  bool given(const std::string& k) const {
    auto it = opt.find(k);
    return it != opt.end() && it->second->count() > 0;
  }
};

const char* describe(const std::string& cmd) {
  if (cmd == "encode-check") return "Check lambda <G|U|G> against the dense Hamiltonian";
  if (cmd == "walk-check") return "Check walk Chebyshev projections, eigenphases and amplification identities";
  if (cmd == "evolve") return "Synthesize exp(-iHt) from the Jacobi-Anger series and compare to the exact exponential";
  if (cmd == "amplitudes") return "Amplitude statistics of the random orthogonal preparation";
  if (cmd == "resources") return "T-count, query and ancilla estimates";
  return "Tabulate Bessel functions J_n(x)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sykq: SYK qubitization lab and resource estimator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sykq::kVersion);
  Flags f;
  std::map<std::string, Bound> bound;
  for (const auto& name : sykq::command_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    Bound& b = bound[name];
    b.opt["config"] = sub->add_option("--config", f.config, "JSON config file; flags override it");
    b.opt["n"] = sub->add_option("--n", f.n, "Number of Majorana modes N");
    b.opt["j"] = sub->add_option("--j", f.j, "Coupling scale J");
    b.opt["t"] = sub->add_option("--t", f.t, "Evolution time t (resources: t in Jt)");
    b.opt["tau"] = sub->add_option("--tau", f.tau, "Set lambda t directly (evolve)");
    b.opt["epsilon"] = sub->add_option("--epsilon", f.epsilon, "Target error");
    b.opt["mode"] = sub->add_option("--mode", f.mode, "Index domain")->check(CLI::IsMember({"all-tuples", "distinct-sorted"}));
    b.opt["prep"] = sub->add_option("--prep", f.prep, "Amplitude oracle")->check(CLI::IsMember({"exact", "random"}));
    b.opt["select"] = sub->add_option("--select", f.select, "Select oracle")->check(CLI::IsMember({"semantic", "gates"}));
    b.opt["depth"] = sub->add_option("--depth", f.depth, "Random circuit depth (0: index qubits squared)");
    b.opt["seed"] = sub->add_option("--seed", f.seed, "First seed");
    b.opt["seeds"] = sub->add_option("--seeds", f.seeds, "Number of consecutive seeds");
    b.opt["grid"] = sub->add_option("--grid", f.grid, "Comma separated sweep values")->delimiter(',');
    b.opt["eps_grid"] = sub->add_option("--eps-grid", f.eps_grid, "Comma separated epsilon values")->delimiter(',');
    b.opt["index_qubits"] = sub->add_option("--index-qubits", f.index_qubits, "Index register width (amplitudes)");
    b.opt["n_max"] = sub->add_option("--n-max", f.n_max, "Largest order (walk-check, bessel-table)");
    b.opt["m_max"] = sub->add_option("--m-max", f.m_max, "Largest amplification power (walk-check)");
    b.opt["out"] = sub->add_option("--out", f.out, "Output file (default: stdout)");
    b.opt["format"] = sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    b.opt["no_timestamp"] = sub->add_flag("--no-timestamp", f.no_timestamp, "Omit the timestamp");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string name;
  for (const auto& n : sykq::command_names())
    if (app.got_subcommand(n)) name = n;
  const Bound& b = bound[name];

  sykq::ExperimentConfig cfg;
  try {
    if (b.given("config")) {
      std::ifstream in(f.config);
      if (!in) throw sykq::ConfigError("cannot read config file " + f.config);
      sykq::json j;
      try {
        in >> j;
      } catch (const sykq::json::exception& e) {
        throw sykq::ConfigError(std::string("config file is not valid JSON: ") + e.what());
      }
      sykq::config_merge_json(cfg, j);
      if (!cfg.command.empty() && cfg.command != name)
        throw sykq::ConfigError("config file is for command '" + cfg.command + "'");
    }
    cfg.command = name;
    if (b.given("n")) cfg.n = f.n;
    if (b.given("j")) cfg.j = f.j;
    if (b.given("t")) cfg.t = f.t;
    if (b.given("tau")) cfg.tau = f.tau;
    if (b.given("epsilon")) cfg.epsilon = f.epsilon;
    if (b.given("mode")) cfg.mode = f.mode;
    if (b.given("prep")) cfg.prep = f.prep;
    if (b.given("select")) cfg.select = f.select;
    if (b.given("depth")) cfg.depth = f.depth;
    if (b.given("seed")) cfg.seed = f.seed;
    if (b.given("seeds")) cfg.seeds = f.seeds;
    if (b.given("grid")) cfg.grid = f.grid;
    if (b.given("eps_grid")) cfg.eps_grid = f.eps_grid;
    if (b.given("index_qubits")) cfg.index_qubits = f.index_qubits;
    if (b.given("n_max")) cfg.n_max = f.n_max;
    if (b.given("m_max")) cfg.m_max = f.m_max;
    if (b.given("out")) cfg.out = f.out;
    if (b.given("format")) cfg.format = f.format;
    if (b.given("no_timestamp")) cfg.no_timestamp = f.no_timestamp;

    const sykq::CommandOutput result = sykq::run_command(cfg);
    const std::string text = sykq::render(result, cfg);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(cfg.out, std::ios::binary);
      if (!os) throw sykq::ConfigError("cannot write " + cfg.out);
      os << text;
    }
    if (result.exit_code != 0) std::cerr << "sykq " << name << ": tolerance check failed\n";
    return result.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sykq " << name << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sykq " << name << ": error: " << e.what() << "\n";
    return 1;
  }
}
