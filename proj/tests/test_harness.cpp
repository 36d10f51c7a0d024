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

#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "qtele/harness.hpp"
#include "test_util.hpp"

using namespace qtele;
using namespace qtele::harness;

namespace {

const char* kBellBell = R"({"dim": 2, "state": [[0.6, 0], [0, 0.8]],
  "channel": [[1, 0], [0, 1]], "measurement": "bell"})";

const char* kSkewed = R"({"dim": 2, "state": [1, 0],
  "channel": [[0.8, 0], [0, 0.2]], "measurement": [[1, 0], [0, 1]]})";

const char* kRankDeficient = R"({"dim": 2, "state": [1, 0],
  "channel": [[1, 0], [0, 0]], "measurement": [[1, 0], [0, 1]]})";

std::vector<std::string> keys_of(const Json& j) {
  std::vector<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
  return k;
}

}  // namespace

TEST(parse_scenario, minimal) {
  const Scenario s = parse_scenario(kBellBell);
  EXPECT_EQ(s.dim, 2u);
  ASSERT_TRUE(s.state.has_value());
  EXPECT_EQ((*s.state)[1], Complex(0.0, 0.8));
  EXPECT_EQ(s.channel, CMatrix::identity(2));
  EXPECT_TRUE(s.bell_measurement);
  EXPECT_FALSE(s.measurement.has_value());
  EXPECT_TRUE(s.options.normalize);
  EXPECT_EQ(s.options.tolerance, kDefaultTolerance);
}

TEST(parse_scenario, flat_and_nested_matrices_agree) {
  const Scenario nested = parse_scenario(R"({"dim": 2, "channel": [[[1, 2], 3], [4, [0, -1]]], "measurement": "bell"})");
  const Scenario flat = parse_scenario(R"({"dim": 2, "channel": [[1, 2], 3, 4, [0, -1]], "measurement": "bell"})");
  EXPECT_EQ(nested.channel, flat.channel);
  EXPECT_EQ(flat.channel(0, 0), Complex(1.0, 2.0));
  EXPECT_EQ(flat.channel(1, 1), Complex(0.0, -1.0));
  EXPECT_FALSE(flat.state.has_value());
}

TEST(parse_scenario, options) {
  const Scenario s = parse_scenario(
      R"({"dim": 1, "channel": [1], "measurement": [1], "options": {"normalize": false, "tolerance": 1e-6}})");
  EXPECT_FALSE(s.options.normalize);
  EXPECT_EQ(s.options.tolerance, 1e-6);
  const Scenario o = apply_overrides(s, {1e-3, true});
  EXPECT_EQ(o.options.tolerance, 1e-3);
  EXPECT_FALSE(o.options.normalize);
  EXPECT_THROW(apply_overrides(s, {-1.0, false}), ValidationError);
}

TEST(parse_scenario, validation_errors_name_the_field) {
  auto path_of = [](const char* text) {
    try {
      parse_scenario(text);
    } catch (const ValidationError& e) {
      return e.path();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(path_of(R"({"dim": 2, "measurement": "bell"})"), "$.channel");
  EXPECT_EQ(path_of(R"({"channel": [1], "measurement": [1]})"), "$.dim");
  EXPECT_EQ(path_of(R"({"dim": 0, "channel": [], "measurement": []})"), "$.dim");
  EXPECT_EQ(path_of(R"({"dim": 2.5, "channel": [], "measurement": []})"), "$.dim");
  EXPECT_EQ(path_of(R"({"dim": 2, "channel": [[1, 0], [0, "x"]], "measurement": "bell"})"), "$.channel[1][1]");
  EXPECT_EQ(path_of(R"({"dim": 2, "channel": [[1, 0], [0]], "measurement": "bell"})"), "$.channel[1]");
  EXPECT_EQ(path_of(R"({"dim": 2, "channel": [[1, 0], [0, 1e999]], "measurement": "bell"})"), "$");
  EXPECT_EQ(path_of(R"({"dim": 3, "channel": [1, 0, 0, 0, 1, 0, 0, 0, 1], "measurement": "bell"})"), "$.measurement");
  EXPECT_EQ(path_of(R"({"dim": 2, "channel": [1, 0, 0, 1], "measurement": "pauli"})"), "$.measurement");
  EXPECT_EQ(path_of(R"({"dim": 2, "state": [1], "channel": [1, 0, 0, 1], "measurement": "bell"})"), "$.state");
  EXPECT_EQ(path_of(R"({"dim": 1, "channel": [1], "measurement": [1], "options": {"tolerance": 0}})"),
            "$.options.tolerance");
  EXPECT_EQ(path_of(R"([1, 2])"), "$");

  try {
    parse_scenario(R"({"dim": 2, "measurement": "bell"})");
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("$.channel"), std::string::npos);
  }
}

TEST(parse_scenario, syntax_errors_report_the_line) {
  try {
    parse_scenario("{\n  \"dim\": 2,\n  \"channel\": [1, 0,, 1]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(run_analyze, bell_bell_is_faithful) {
  const Report r = run_analyze(parse_scenario(kBellBell));
  EXPECT_EQ(r.exit_code, kExitFaithful);
  ASSERT_EQ(r.body["outcomes"].size(), 4u);
  for (const auto& o : r.body["outcomes"]) {
    EXPECT_EQ(o["status"], "faithful");
    EXPECT_NEAR(o["rho"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(o["joint_success_probability"].get<double>(), 0.25, 1e-12);
  }
  EXPECT_EQ(r.body["summary"]["faithful_outcomes"], 4);
  EXPECT_NEAR(r.body["summary"]["total_success_probability"].get<double>(), 1.0, 1e-12);
}

TEST(run_analyze, skewed_channel_is_probabilistic) {
  const Report r = run_analyze(parse_scenario(kSkewed));
  EXPECT_EQ(r.exit_code, kExitProbabilistic);
  const Json& o = r.body["outcomes"][0];
  EXPECT_EQ(o["status"], "probabilistic");
  EXPECT_FALSE(o["faithful"].get<bool>());
  // A = diag(.8, .2) / sqrt(.68), B = I / sqrt2: sigma_min^2 = .04 / 1.36.
  EXPECT_NEAR(o["joint_success_probability"].get<double>(), 0.04 / 1.36, 1e-12);
}

TEST(run_analyze, rank_deficient_channel_is_unrecoverable) {
  const Report r = run_analyze(parse_scenario(kRankDeficient));
  EXPECT_EQ(r.exit_code, kExitUnrecoverable);
  const Json& o = r.body["outcomes"][0];
  EXPECT_EQ(o["status"], "unrecoverable");
  EXPECT_TRUE(o["correction"].is_null());
  EXPECT_TRUE(o["error"].is_string());
  EXPECT_EQ(r.body["summary"]["status"], "unrecoverable");
}

TEST(run_analyze, raw_matrices_report_no_total) {
  Scenario s = apply_overrides(parse_scenario(kBellBell), {std::nullopt, true});
  const Report r = run_analyze(s);
  EXPECT_EQ(r.exit_code, kExitFaithful);
  EXPECT_NEAR(r.body["outcomes"][0]["rho"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(r.body["outcomes"][0]["joint_success_probability"].is_null());
  EXPECT_TRUE(r.body["summary"]["total_success_probability"].is_null());
}

TEST(run_teleport, basis_state_through_bell_channel) {
  const Report r = run_teleport(parse_scenario(R"({"dim": 2, "state": [1, 0],
      "channel": [[1, 0], [0, 1]], "measurement": "bell"})"));
  EXPECT_EQ(r.exit_code, kExitFaithful);
  for (const auto& o : r.body["outcomes"]) {
    EXPECT_NEAR(o["fidelity"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(o["outcome_probability"].get<double>(), 0.25, 1e-12);
    EXPECT_LE(o["oracle_residual"].get<double>(), 1e-9);
  }
  EXPECT_NEAR(r.body["summary"]["total_outcome_probability"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(r.body["summary"]["min_fidelity"].get<double>(), 1.0, 1e-12);
}

TEST(run_teleport, unrecoverable_and_invalid_inputs) {
  const Report r = run_teleport(parse_scenario(kRankDeficient));
  EXPECT_EQ(r.exit_code, kExitUnrecoverable);
  EXPECT_TRUE(r.body["outcomes"][0]["corrected_state"].is_null());

  EXPECT_THROW(run_teleport(parse_scenario(R"({"dim": 2, "channel": [1, 0, 0, 1], "measurement": "bell"})")),
               ValidationError);
  EXPECT_THROW(run_teleport(apply_overrides(parse_scenario(kSkewed), {std::nullopt, true})), ValidationError);
  EXPECT_THROW(run_analyze(parse_scenario(R"({"dim": 2, "channel": [0, 0, 0, 0], "measurement": "bell"})")),
               ValidationError);
}

TEST(run_table1, sixteen_rows_with_annotations) {
  const Report r = run_table1();
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.body["rows"].size(), 16u);
  EXPECT_TRUE(r.body["summary"]["all_inverse_exact"].get<bool>());
  EXPECT_TRUE(r.body["summary"]["all_match_up_to_sign"].get<bool>());
  EXPECT_EQ(r.body["summary"]["sign_deviation_rows"], Json({5, 7, 9, 11, 13, 15}));
  for (const auto& row : r.body["rows"]) {
    EXPECT_EQ(row["sign_matches_reference"].get<bool>(), row["reference_sign"].get<int>() == 1);
  }
}

TEST(run_sweep, deterministic_across_runs_and_thread_counts) {
  SweepConfig cfg;
  cfg.trials = 30;
  cfg.threads = 1;
  const std::string one = run_sweep(cfg).body.dump(2);
  EXPECT_EQ(one, run_sweep(cfg).body.dump(2));
  cfg.threads = 4;
  EXPECT_EQ(one, run_sweep(cfg).body.dump(2));
  cfg.seed = 43;
  EXPECT_NE(one, run_sweep(cfg).body.dump(2));
}

TEST(run_sweep, checks_pass_and_classifies_both_kinds) {
  SweepConfig cfg;
  cfg.trials = 24;
  const Report r = run_sweep(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.body["summary"]["status"], "ok");
  const Json& kinds = r.body["by_kind"];
  EXPECT_EQ(kinds["generic"]["classification"]["faithful"], 0);
  EXPECT_EQ(kinds["maximal"]["classification"]["probabilistic"], 0);
  EXPECT_EQ(kinds["maximal"]["classification"]["faithful"], kinds["maximal"]["outcomes"]);
  EXPECT_LE(r.body["totals"]["max_roundtrip_residual"].get<double>(), 1e-9);
}

TEST(run_sweep, rejects_bad_configs) {
  SweepConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(run_sweep(cfg), ValidationError);
  cfg.trials = 3;
  cfg.dims = {2, 9};
  EXPECT_THROW(run_sweep(cfg), ValidationError);
  cfg.dims = {};
  EXPECT_THROW(run_sweep(cfg), ValidationError);
}

TEST(reports, share_top_level_keys) {
  const std::vector<std::string> expected{"command", "dim", "normalized", "tolerance", "outcomes", "summary", "error"};
  EXPECT_EQ(keys_of(run_analyze(parse_scenario(kSkewed)).body), expected);
  EXPECT_EQ(keys_of(run_analyze(parse_scenario(kRankDeficient)).body), expected);
  EXPECT_EQ(keys_of(usage_error_report("analyze", "bad")), expected);

  auto teleport_keys = keys_of(run_teleport(parse_scenario(kBellBell)).body);
  EXPECT_EQ(teleport_keys, (std::vector<std::string>{"command", "dim", "normalized", "tolerance", "state", "outcomes",
                                                      "summary", "error"}));
}

TEST(reports, outcome_keys_are_stable) {
  const Json a = run_analyze(parse_scenario(kSkewed)).body["outcomes"][0];
  const Json b = run_analyze(parse_scenario(kRankDeficient)).body["outcomes"][0];
  EXPECT_EQ(keys_of(a), keys_of(b));
  const Json c = run_teleport(parse_scenario(kSkewed)).body["outcomes"][0];
  const Json d = run_teleport(parse_scenario(kRankDeficient)).body["outcomes"][0];
  EXPECT_EQ(keys_of(c), keys_of(d));
}

TEST(reports, no_negative_zeros) {
  const std::string text = run_teleport(parse_scenario(kBellBell)).body.dump();
  EXPECT_EQ(text.find("-0.0,"), std::string::npos);
  EXPECT_EQ(text.find("-0.0]"), std::string::npos);
}
