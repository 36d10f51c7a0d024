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

// Batch front end: JSON scenarios in, JSON reports out.
//
// Scenario schema (keys lowercase):
//
//   {
//     "dim": 2,
//     "state": [[1, 0], [0, 0]],                      // optional, [re, im] pairs
//     "channel": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],  // rows of [re, im]
//     "measurement": "bell",                          // or a matrix
//     "options": {"normalize": true, "tolerance": 1e-9}
//   }
//
// A matrix is either dim rows of dim complex numbers or a flat row-major
// list of dim^2 complex numbers. A complex number is [re, im] or a bare real.
// "bell" selects the four qubit Bell operators and reports every outcome.
//
// Exit codes: 0 faithful, 2 probabilistic but recoverable, 3 unrecoverable,
// 64 usage or parse error.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qtele/bell.hpp"
#include "qtele/error.hpp"
#include "qtele/filter.hpp"
#include "qtele/kernel.hpp"
#include "qtele/linalg.hpp"
#include "qtele/oracle.hpp"
#include "qtele/random.hpp"
#include "qtele/state.hpp"
#include "qtele/teleport.hpp"

namespace qtele::harness {

using Json = nlohmann::ordered_json;

inline constexpr int kExitFaithful = 0;
inline constexpr int kExitProbabilistic = 2;
inline constexpr int kExitUnrecoverable = 3;
inline constexpr int kExitUsage = 64;

inline constexpr std::size_t kMaxScenarioDim = 16;

/// Syntax error in scenario text; carries 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that violates the schema; carries the offending field path.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct ScenarioOptions {
  bool normalize = true;
  double tolerance = kDefaultTolerance;
};

struct Scenario {
  std::size_t dim = 0;
  std::optional<CVector> state;
  CMatrix channel = CMatrix::zeros(1, 1);
  /// Empty when the Bell family was selected.
  std::optional<CMatrix> measurement;
  bool bell_measurement = false;
  ScenarioOptions options;
};

/// Command-line overrides applied on top of a scenario's own options.
struct Overrides {
  std::optional<double> tolerance;
  bool raw = false;
};

struct Report {
  Json body;
  int exit_code = 0;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline double finite_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(path, "number is not finite");
  return v;
}

inline bool is_complex_like(const Json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

inline Complex parse_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {finite_number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw ValidationError(path, "expected a complex number [re, im]");
  return {finite_number(j[0], path + "[0]"), finite_number(j[1], path + "[1]")};
}

inline CVector parse_vector(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array of complex numbers");
  if (j.size() != dim) {
    throw ValidationError(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Complex> v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(parse_complex(j[i], path + "[" + std::to_string(i) + "]"));
  return CVector(std::move(v));
}

inline CMatrix parse_matrix(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected a matrix");
  std::vector<Complex> e;
  e.reserve(dim * dim);
  if (j.size() == dim * dim && std::all_of(j.begin(), j.end(), is_complex_like)) {
    for (std::size_t i = 0; i < j.size(); ++i) e.push_back(parse_complex(j[i], path + "[" + std::to_string(i) + "]"));
    return CMatrix(dim, dim, std::move(e));
  }
  if (j.size() != dim) {
    throw ValidationError(path, "expected " + std::to_string(dim) + " rows or " + std::to_string(dim * dim) +
                                    " flat entries, got " + std::to_string(j.size()));
  }
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const CVector row = parse_vector(j[r], dim, rp);
    e.insert(e.end(), row.begin(), row.end());
  }
  return CMatrix(dim, dim, std::move(e));
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("scenario parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what(),
                     line, col);
  } catch (const nlohmann::json::out_of_range& e) {
    throw ValidationError("$", std::string("number is not finite: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("$", "scenario must be a JSON object");

  Scenario s;
  if (!doc.contains("dim")) throw ValidationError("$.dim", "missing required field");
  const Json& dim = doc["dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1 ||
      dim.get<std::int64_t>() > static_cast<std::int64_t>(kMaxScenarioDim)) {
    throw ValidationError("$.dim", "expected an integer in 1.." + std::to_string(kMaxScenarioDim));
  }
  s.dim = static_cast<std::size_t>(dim.get<std::int64_t>());

  if (doc.contains("state") && !doc["state"].is_null()) s.state = detail::parse_vector(doc["state"], s.dim, "$.state");

  if (!doc.contains("channel")) throw ValidationError("$.channel", "missing required field");
  s.channel = detail::parse_matrix(doc["channel"], s.dim, "$.channel");

  if (!doc.contains("measurement")) throw ValidationError("$.measurement", "missing required field");
  const Json& meas = doc["measurement"];
  if (meas.is_string()) {
    if (meas.get<std::string>() != "bell") throw ValidationError("$.measurement", "unknown keyword (expected \"bell\")");
    if (s.dim != 2) throw ValidationError("$.measurement", "the Bell family needs dim = 2");
    s.bell_measurement = true;
  } else {
    s.measurement = detail::parse_matrix(meas, s.dim, "$.measurement");
  }

  if (doc.contains("options")) {
    const Json& opt = doc["options"];
    if (!opt.is_object()) throw ValidationError("$.options", "expected an object");
    if (opt.contains("normalize")) {
      if (!opt["normalize"].is_boolean()) throw ValidationError("$.options.normalize", "expected a boolean");
      s.options.normalize = opt["normalize"].get<bool>();
    }
    if (opt.contains("tolerance")) {
      const double tol = detail::finite_number(opt["tolerance"], "$.options.tolerance");
      if (tol <= 0.0) throw ValidationError("$.options.tolerance", "must be positive");
      s.options.tolerance = tol;
    }
  }
  return s;
}

inline Scenario apply_overrides(Scenario s, const Overrides& o) {
  if (o.tolerance) {
    if (!(*o.tolerance > 0.0) || !std::isfinite(*o.tolerance)) throw ValidationError("--tolerance", "must be positive");
    s.options.tolerance = *o.tolerance;
  }
  if (o.raw) s.options.normalize = false;
  return s;
}

// ---------------------------------------------------------------------------
// Encoding

inline Json to_json(Complex z) {
  // Adding +0.0 folds -0.0 into 0.0 so signed zeros never reach the output.
  return Json::array({z.real() + 0.0, z.imag() + 0.0});
}

inline Json to_json(const CVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

inline Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double d : v) out.push_back(d + 0.0);
  return out;
}

inline Json usage_error_report(std::string_view command, const std::string& message) {
  Json body;
  body["command"] = command;
  body["dim"] = nullptr;
  body["normalized"] = nullptr;
  body["tolerance"] = nullptr;
  body["outcomes"] = Json::array();
  body["summary"] = {{"status", "error"}, {"exit_code", kExitUsage}};
  body["error"] = message;
  return body;
}

// ---------------------------------------------------------------------------
// Scenario runs

namespace detail {

struct LabeledOutcome {
  std::string label;
  MeasurementOperator op;
};

/// Matrices are normalized on request; otherwise taken as given, flagged
/// normalized only if they already are.
template <class Coeff>
Coeff make_coefficients(const CMatrix& m, bool normalize) {
  if (normalize) return Coeff::normalize(m);
  const double hs = Coeff::hilbert_schmidt_norm_squared(m);
  return Coeff(m, std::abs(hs - 1.0) <= kIdentityTolerance);
}

inline std::vector<LabeledOutcome> outcomes_of(const Scenario& s) {
  std::vector<LabeledOutcome> out;
  if (s.bell_measurement) {
    const BellFamily fam = bell_family(s.options.normalize);
    const char* labels[] = {"identity", "z", "x", "real_y"};
    for (std::size_t i = 0; i < 4; ++i) out.push_back({labels[i], fam.operators[i]});
  } else {
    out.push_back({"measurement", make_coefficients<MeasurementOperator>(*s.measurement, s.options.normalize)});
  }
  return out;
}

enum class Status { faithful, probabilistic, unrecoverable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::faithful: return "faithful";
    case Status::probabilistic: return "probabilistic";
    default: return "unrecoverable";
  }
}

inline int exit_code_of(Status s) {
  switch (s) {
    case Status::faithful: return kExitFaithful;
    case Status::probabilistic: return kExitProbabilistic;
    default: return kExitUnrecoverable;
  }
}

inline Json json_or_null(const std::optional<double>& v) { return v ? Json(*v + 0.0) : Json(nullptr); }

inline Json header(const char* command, const Scenario& s) {
  Json body;
  body["command"] = command;
  body["dim"] = s.dim;
  body["normalized"] = s.options.normalize;
  body["tolerance"] = s.options.tolerance;
  return body;
}

inline ChannelMatrix channel_of(const Scenario& s) {
  try {
    return make_coefficients<ChannelMatrix>(s.channel, s.options.normalize);
  } catch (const ContractError& e) {
    throw ValidationError("$.channel", e.what());
  }
}

}  // namespace detail

/// rho, X, faithfulness, U and singular values for every outcome.
inline Report run_analyze(const Scenario& s) {
  using detail::Status;
  const ChannelMatrix a = detail::channel_of(s);
  const double tol = s.options.tolerance;

  Json outcomes = Json::array();
  Status worst = Status::faithful;
  std::size_t counts[3] = {0, 0, 0};
  double total_success = 0.0;
  bool total_known = true;

  for (const auto& [label, b] : detail::outcomes_of(s)) {
    const ComposedMap m = compose(b, a);
    Json o;
    o["label"] = label;
    o["singular_values"] = to_json(singular_values(m.matrix()));
    Status status = Status::unrecoverable;
    Json rho = nullptr, x = nullptr, u = nullptr, faithful = false, success = nullptr, error = nullptr;
    try {
      const ChannelDecomposition d = decompose(m);
      rho = d.rho;
      x = to_json(d.x);
      u = to_json(correction_operator(m));
      const bool f = is_faithful(m, tol);
      faithful = f;
      status = f ? Status::faithful : Status::probabilistic;
      if (m.from_normalized()) {
        const double p = probabilistic_filter(m).joint_success_probability;
        success = p;
        total_success += p;
      } else {
        total_known = false;
      }
    } catch (const DegenerateChannelError& e) {
      error = e.what();
    } catch (const UnrecoverableOutcomeError& e) {
      error = e.what();
    }
    o["status"] = detail::status_name(status);
    o["rho"] = rho;
    o["x"] = x;
    o["faithful"] = faithful;
    o["correction"] = u;
    o["joint_success_probability"] = success;
    o["error"] = error;
    outcomes.push_back(std::move(o));
    ++counts[static_cast<int>(status)];
    worst = std::max(worst, status);
  }

  Report r;
  r.exit_code = detail::exit_code_of(worst);
  r.body = detail::header("analyze", s);
  r.body["outcomes"] = std::move(outcomes);
  r.body["summary"] = {
      {"status", detail::status_name(worst)},
      {"exit_code", r.exit_code},
      {"faithful_outcomes", counts[0]},
      {"probabilistic_outcomes", counts[1]},
      {"unrecoverable_outcomes", counts[2]},
      {"total_success_probability", total_known ? Json(total_success) : Json(nullptr)},
  };
  r.body["error"] = nullptr;
  return r;
}

/// Full teleportation of the scenario state for every outcome, cross-checked
/// against the state-vector oracle when dim <= oracle::kMaxDim.
inline Report run_teleport(const Scenario& s) {
  using detail::Status;
  if (!s.state) throw ValidationError("$.state", "teleport needs a state");
  const ChannelMatrix a = detail::channel_of(s);
  const double tol = s.options.tolerance;

  std::optional<QuditState> alpha;
  try {
    alpha = s.options.normalize ? QuditState::normalize(*s.state) : QuditState(*s.state);
  } catch (const ContractError& e) {
    throw ValidationError("$.state", e.what());
  }
  const auto outcomes_in = detail::outcomes_of(s);
  if (!a.is_normalized()) throw ValidationError("$.channel", "teleport needs a normalized channel (drop --raw)");
  for (const auto& o : outcomes_in) {
    if (!o.op.is_normalized()) throw ValidationError("$.measurement", "teleport needs a normalized measurement");
  }

  Json outcomes = Json::array();
  Status worst = Status::faithful;
  std::size_t counts[3] = {0, 0, 0};
  double total_p = 0.0;
  double total_success = 0.0;
  std::optional<double> min_fid;
  std::optional<double> max_residual;
  const bool use_oracle = s.dim <= oracle::kMaxDim;

  for (const auto& [label, b] : outcomes_in) {
    const ComposedMap m = compose(b, a);
    const CVector v = project_coefficients(m, *alpha);
    const double p = norm_squared(v);
    total_p += p;

    std::optional<double> residual;
    if (use_oracle) {
      const CVector vo = oracle::project(oracle::build_joint(*alpha, a), oracle::build_measurement_state(b));
      residual = max_abs_diff(v, vo);
      max_residual = std::max(max_residual.value_or(0.0), *residual);
    }

    Json o;
    o["label"] = label;
    o["outcome_probability"] = p;
    o["oracle_residual"] = detail::json_or_null(residual);
    Status status = Status::unrecoverable;
    Json rho = nullptr, faithful = false, u = nullptr, state = nullptr, success = 0.0, fid = nullptr, det_fid = nullptr,
         error = nullptr;
    try {
      const TeleportOutcome out = teleport(*alpha, a, b, tol);
      status = out.faithful ? Status::faithful : Status::probabilistic;
      rho = out.rho;
      faithful = out.faithful;
      u = to_json(out.correction);
      state = to_json(out.corrected_state.amplitudes());
      success = out.success_probability;
      fid = out.fidelity;
      det_fid = out.deterministic_fidelity;
      total_success += out.success_probability;
      min_fid = std::min(min_fid.value_or(1.0), out.fidelity);
    } catch (const DegenerateChannelError& e) {
      error = e.what();
    } catch (const UnrecoverableOutcomeError& e) {
      error = e.what();
    }
    o["status"] = detail::status_name(status);
    o["rho"] = rho;
    o["faithful"] = faithful;
    o["correction"] = u;
    o["corrected_state"] = state;
    o["success_probability"] = success;
    o["fidelity"] = fid;
    o["deterministic_fidelity"] = det_fid;
    o["error"] = error;
    outcomes.push_back(std::move(o));
    ++counts[static_cast<int>(status)];
    worst = std::max(worst, status);
  }

  Report r;
  r.exit_code = detail::exit_code_of(worst);
  r.body = detail::header("teleport", s);
  r.body["state"] = to_json(alpha->amplitudes());
  r.body["outcomes"] = std::move(outcomes);
  r.body["summary"] = {
      {"status", detail::status_name(worst)},
      {"exit_code", r.exit_code},
      {"faithful_outcomes", counts[0]},
      {"probabilistic_outcomes", counts[1]},
      {"unrecoverable_outcomes", counts[2]},
      {"total_outcome_probability", total_p},
      {"total_success_probability", total_success},
      {"min_fidelity", detail::json_or_null(min_fid)},
      {"max_oracle_residual", detail::json_or_null(max_residual)},
  };
  r.body["error"] = nullptr;
  return r;
}

/// The 16-entry Bell table with per-row sign annotations.
inline Report run_table1() {
  const auto rows = generate_table1();
  Json out = Json::array();
  bool all_inverse_exact = true;
  bool all_match = true;
  Json deviations = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const bool exact = row.u * row.ba_t == CMatrix::identity(2);
    all_inverse_exact = all_inverse_exact && exact;
    all_match = all_match && row.reference_sign != 0;
    if (row.reference_sign == -1) deviations.push_back(i);
    Json j;
    j["index"] = i;
    j["block"] = row.block;
    j["row"] = row.row;
    j["a"] = to_json(row.a);
    j["b"] = to_json(row.b);
    j["ba"] = to_json(row.ba);
    j["ba_t"] = to_json(row.ba_t);
    j["u"] = to_json(row.u);
    j["reference_ba"] = to_json(row.reference_ba);
    j["reference_u"] = to_json(row.reference_u);
    j["reference_sign"] = row.reference_sign;
    j["sign_matches_reference"] = row.sign_matches_reference;
    j["inverse_exact"] = exact;
    out.push_back(std::move(j));
  }
  Report r;
  r.exit_code = 0;
  r.body["command"] = "table1";
  r.body["row_count"] = rows.size();
  r.body["rows"] = std::move(out);
  r.body["summary"] = {
      {"exit_code", 0},
      {"all_inverse_exact", all_inverse_exact},
      {"all_match_up_to_sign", all_match},
      {"sign_deviation_rows", std::move(deviations)},
  };
  return r;
}

// ---------------------------------------------------------------------------
// Seeded sweeps

struct SweepConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::vector<std::size_t> dims{2, 3, 4};
  double tolerance = kDefaultTolerance;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

enum class TrialKind { generic, maximal };

struct TrialResult {
  std::size_t dim = 0;
  TrialKind kind = TrialKind::generic;
  std::size_t outcomes = 0;
  std::size_t faithful = 0;
  std::size_t probabilistic = 0;
  std::size_t unrecoverable = 0;
  std::size_t errors = 0;
  double oracle_residual = 0.0;
  double oracle_residual_faithful = 0.0;
  double completeness_residual = 0.0;
  double roundtrip_residual = 0.0;
  double min_faithful_fidelity = 1.0;
  double total_success_probability = 0.0;
};

/// Trial t uses its own generator, so results do not depend on scheduling.
/// Even-numbered passes over the dimension list draw a generic channel with
/// a random orthonormal measurement family; odd passes draw a maximally
/// entangled channel with a family of scaled unitaries.
inline TrialResult run_trial(const SweepConfig& cfg, std::size_t t) {
  Rng rng = make_rng(cfg.seed, t);
  TrialResult r;
  r.dim = cfg.dims[t % cfg.dims.size()];
  r.kind = (t / cfg.dims.size()) % 2 == 0 ? TrialKind::generic : TrialKind::maximal;
  const std::size_t n = r.dim;

  const QuditState alpha = random_state(n, rng);
  const ChannelMatrix a = r.kind == TrialKind::generic ? random_channel(n, rng) : random_maximal_channel(n, rng);
  const auto family = r.kind == TrialKind::generic ? random_orthonormal_family(n, rng) : random_unitary_family(n, rng);
  const bool use_oracle = n <= oracle::kMaxDim;
  const oracle::JointState joint = use_oracle ? oracle::build_joint(alpha, a)
                                              : oracle::JointState(1, CVector::zeros(1));

  double total_p = 0.0;
  for (const auto& b : family) {
    ++r.outcomes;
    const ComposedMap m = compose(b, a);
    const CVector v = project_coefficients(m, alpha);
    total_p += norm_squared(v);
    double residual = 0.0;
    if (use_oracle) {
      residual = max_abs_diff(v, oracle::project(joint, oracle::build_measurement_state(b)));
      r.oracle_residual = std::max(r.oracle_residual, residual);
    }
    try {
      const TeleportOutcome out = teleport(alpha, a, b, cfg.tolerance);
      r.total_success_probability += out.success_probability;
      r.roundtrip_residual = std::max(r.roundtrip_residual, max_abs_diff(out.correction * v, out.rho * alpha.amplitudes()));
      if (out.faithful) {
        ++r.faithful;
        r.oracle_residual_faithful = std::max(r.oracle_residual_faithful, residual);
        r.min_faithful_fidelity = std::min(r.min_faithful_fidelity, out.deterministic_fidelity);
      } else {
        ++r.probabilistic;
      }
    } catch (const DegenerateChannelError&) {
      ++r.unrecoverable;
    } catch (const UnrecoverableOutcomeError&) {
      ++r.unrecoverable;
    } catch (const Error&) {
      ++r.errors;
    }
  }
  r.completeness_residual = std::abs(total_p - 1.0);
  return r;
}

inline std::vector<TrialResult> run_trials(const SweepConfig& cfg) {
  std::vector<TrialResult> results(cfg.trials);
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cfg.trials, 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < cfg.trials; t = next++) results[t] = run_trial(cfg, t);
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  return results;
}

inline Report run_sweep(const SweepConfig& cfg) {
  if (cfg.trials == 0) throw ValidationError("--trials", "must be positive");
  if (cfg.dims.empty()) throw ValidationError("--dims", "must list at least one dimension");
  for (std::size_t d : cfg.dims) {
    if (d < 1 || d > oracle::kMaxDim) {
      throw ValidationError("--dims", "dimension " + std::to_string(d) + " outside 1.." + std::to_string(oracle::kMaxDim));
    }
  }
  const auto results = run_trials(cfg);

  struct Aggregate {
    std::size_t trials = 0, outcomes = 0, faithful = 0, probabilistic = 0, unrecoverable = 0, errors = 0;
    double oracle = 0.0, oracle_faithful = 0.0, completeness = 0.0, roundtrip = 0.0, min_fid = 1.0;
    void add(const TrialResult& r) {
      ++trials;
      outcomes += r.outcomes;
      faithful += r.faithful;
      probabilistic += r.probabilistic;
      unrecoverable += r.unrecoverable;
      errors += r.errors;
      oracle = std::max(oracle, r.oracle_residual);
      oracle_faithful = std::max(oracle_faithful, r.oracle_residual_faithful);
      completeness = std::max(completeness, r.completeness_residual);
      roundtrip = std::max(roundtrip, r.roundtrip_residual);
      min_fid = std::min(min_fid, r.min_faithful_fidelity);
    }
    Json json() const {
      return {
          {"trials", trials},
          {"outcomes", outcomes},
          {"classification",
           {{"faithful", faithful}, {"probabilistic", probabilistic}, {"unrecoverable", unrecoverable}, {"errors", errors}}},
          {"max_oracle_residual", oracle},
          {"max_oracle_residual_faithful", oracle_faithful},
          {"max_completeness_residual", completeness},
          {"max_roundtrip_residual", roundtrip},
          {"min_faithful_fidelity", min_fid},
      };
    }
  };

  Aggregate total;
  std::vector<Aggregate> per_dim(cfg.dims.size());
  Aggregate generic, maximal;
  for (std::size_t t = 0; t < results.size(); ++t) {
    total.add(results[t]);
    per_dim[t % cfg.dims.size()].add(results[t]);
    (results[t].kind == TrialKind::generic ? generic : maximal).add(results[t]);
  }

  Report r;
  r.exit_code = 0;
  r.body["command"] = "sweep";
  r.body["seed"] = cfg.seed;
  r.body["trials"] = cfg.trials;
  r.body["dims"] = cfg.dims;
  r.body["tolerance"] = cfg.tolerance;
  r.body["totals"] = total.json();
  r.body["by_kind"] = {{"generic", generic.json()}, {"maximal", maximal.json()}};
  Json dims = Json::array();
  for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
    Json d = per_dim[i].json();
    d["dim"] = cfg.dims[i];
    dims.push_back(std::move(d));
  }
  r.body["by_dim"] = std::move(dims);
  const bool oracle_ok = total.oracle <= 1e-9;
  const bool complete_ok = total.completeness <= 1e-12;
  const bool fidelity_ok = total.min_fid >= 1.0 - 1e-9;
  r.body["checks"] = {
      {"oracle_residual_within_1e-9", oracle_ok},
      {"completeness_within_1e-12", complete_ok},
      {"faithful_fidelity_within_1e-9", fidelity_ok},
  };
  r.body["summary"] = {{"status", oracle_ok && complete_ok && fidelity_ok ? "ok" : "check_failed"}, {"exit_code", 0}};
  return r;
}

}  // namespace qtele::harness
