// Copyright 2026 The qtele Authors
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

// qtele: batch teleportation analysis.
//
//   qtele analyze <scenario.json>
//   qtele teleport <scenario.json>
//   qtele table1
//   qtele sweep --seed 42 --trials 100 --dims 2,3,4
//
// Global flags: --tolerance <real>, --raw, --output <path>.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtele/harness.hpp"

namespace {

using qtele::harness::Json;
using qtele::harness::kExitUsage;

bool write_report(const Json& body, const std::string& output) {
  const std::string text = body.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-notation qudit teleportation: composed maps, corrections, oracle checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tolerance;
  bool raw = false;
  std::string output;
  app.add_option("--tolerance", tolerance, "Predicate tolerance (default 1e-9)");
  app.add_flag("--raw", raw, "Use channel and measurement matrices without normalization");
  app.add_option("--output", output, "Report file (default standard output)");

  std::string analyze_file, teleport_file;
  auto* analyze = app.add_subcommand("analyze", "rho, X, faithfulness and correction for a scenario");
  analyze->add_option("scenario", analyze_file, "Scenario JSON file")->required();
  auto* teleport = app.add_subcommand("teleport", "Teleport the scenario state and cross-check with the oracle");
  teleport->add_option("scenario", teleport_file, "Scenario JSON file")->required();
  auto* table1 = app.add_subcommand("table1", "Bell-channel correction table with sign annotations");

  qtele::harness::SweepConfig sweep_cfg;
  auto* sweep = app.add_subcommand("sweep", "Seeded randomized kernel/oracle sweep");
  sweep->add_option("--seed", sweep_cfg.seed, "Generator seed")->capture_default_str();
  sweep->add_option("--trials", sweep_cfg.trials, "Number of trials")->capture_default_str();
  sweep->add_option("--dims", sweep_cfg.dims, "Comma-separated dimensions")->delimiter(',')->capture_default_str();
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  qtele::harness::Report report;
  try {
    if (*table1) {
      report = qtele::harness::run_table1();
    } else if (*sweep) {
      if (tolerance) sweep_cfg.tolerance = *tolerance;
      report = qtele::harness::run_sweep(sweep_cfg);
    } else {
      const std::string& path = *analyze ? analyze_file : teleport_file;
      const auto text = read_file(path);
      if (!text) throw qtele::harness::ValidationError(path, "cannot read scenario file");
      const auto scenario = qtele::harness::apply_overrides(qtele::harness::parse_scenario(*text), {tolerance, raw});
      report = *analyze ? qtele::harness::run_analyze(scenario) : qtele::harness::run_teleport(scenario);
    }
  } catch (const qtele::harness::ParseError& e) {
    std::cerr << "qtele: " << e.what() << "\n";
    write_report(qtele::harness::usage_error_report(command, e.what()), output);
    return kExitUsage;
  } catch (const qtele::harness::ValidationError& e) {
    std::cerr << "qtele: invalid input: " << e.what() << "\n";
    write_report(qtele::harness::usage_error_report(command, e.what()), output);
    return kExitUsage;
  }

  if (report.exit_code == qtele::harness::kExitUnrecoverable) {
    std::cerr << "qtele: at least one measurement outcome is unrecoverable\n";
  }
  if (!write_report(report.body, output)) {
    std::cerr << "qtele: cannot write report to " << output << "\n";
    return kExitUsage;
  }
  return report.exit_code;
}
