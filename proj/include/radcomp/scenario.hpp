#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radcomp/comparison.hpp"
#include "radcomp/models.hpp"
#include "radcomp/rigidity.hpp"
#include "radcomp/volume.hpp"

namespace radcomp {

// Config or semantic validation failure; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  std::string name;
  ModelSpec model;
  std::optional<DensityBounds> bounds;
  std::optional<double> k_override;
  struct Grid {
    double r_min = 0.1;
    double r_max = 10.0;
    int steps = 1000;
    int theta_samples = 64;
    int psi_samples = 32;
  } grid;
  struct Tolerances {
    double identity = 1e-12;
    double ode = 1e-6;
    double fd = 1e-5;
    double inequality = 1e-9;
    double rigidity = 1e-9;
  } tol;
  std::vector<std::string> checks;  // empty: all applicable
  std::string output = "out";

  ComparisonSpec comparison_spec() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double min_slack = 0.0;
  GridPoint argmin;
  HypothesisStatus hypothesis;
};

struct RigidityResult {
  std::string name;
  RigidityVerdict verdict;
  bool pass = true;
};

// Fixed CSV column order, one row per (r, theta) sample.
inline constexpr std::array<const char*, 14> kSeriesColumns = {
    "r",          "theta",        "A",           "S_tan",
    "wS_tan",     "lap_r",        "wlap_r",      "mhess_rad",
    "mhess_tan",  "gap_mhess",    "gap_hessian", "gap_laplacian",
    "norm_density", "dlog_norm_density"};

struct RunReport {
  std::string scenario;
  bool pass = false;
  std::vector<CheckResult> checks;
  std::vector<RigidityResult> rigidity;
  // Volume table: (R, vol, weighted vol, growth-fit residual).
  std::vector<std::array<double, 4>> volume_table;
  double growth_exponent = 0.0;
  std::optional<double> growth_expected;
  double wall_clock_ms = 0.0;
  nlohmann::json config_echo;
  std::vector<std::array<double, 14>> series_rows;
};

// Parses a JSON config document; unknown keys are rejected with the field
// path in the message. A bare built-in name is accepted by the CLI, not here.
ScenarioConfig parse_config(const std::string& text);

std::vector<std::string> builtin_scenario_names();
ScenarioConfig builtin_scenario(const std::string& name);
std::vector<std::string> registered_checks();

// Executes the configured checks in dependency order. Inequality violations
// mark the report failed; infrastructure errors propagate as exceptions.
RunReport run_scenario(const ScenarioConfig& cfg);

nlohmann::json report_to_json(const RunReport& report);

// Writes series.csv, volumes.csv, and report.json into dir.
void emit_outputs(const RunReport& report, const std::string& dir);

}  // namespace radcomp
