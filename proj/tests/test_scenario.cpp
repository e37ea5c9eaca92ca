#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "radcomp/scenario.hpp"

using namespace radcomp;

namespace {

ScenarioConfig quick(const std::string& name, int steps = 40) {
  std::ostringstream cfg;
  cfg << R"({"name": ")" << name << R"(", "grid": {"steps": )" << steps
      << "}}";
  return parse_config(cfg.str());
}

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("config parsing") {
  SUBCASE("bare built-in name expands") {
    const ScenarioConfig cfg = parse_config(R"({"name": "cone"})");
    CHECK(cfg.model.warp.kind == "power");
    CHECK(cfg.k_override == 2.0);
    CHECK_FALSE(cfg.checks.empty());
  }
  SUBCASE("overlay on a built-in") {
    const ScenarioConfig cfg = parse_config(
        R"({"name": "euclidean", "grid": {"r_max": 5.0}, "bounds": {"K_override": 2.0}})");
    CHECK(cfg.model.warp.kind == "identity");
    CHECK(cfg.grid.r_max == 5.0);
    CHECK(cfg.k_override == 2.0);
    CHECK_FALSE(cfg.bounds.has_value());
  }
  SUBCASE("unknown keys are rejected with the field path") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"name": "euclidean", "grdi": {}})"),
                         "unknown key 'grdi'", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"name": "euclidean", "grid": {"stesp": 5}})"),
        "unknown key 'grid.stesp'", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"name": "euclidean", "model": {"warp": {"knd": "sin"}}})"),
        "unknown key 'model.warp.knd'", ConfigError);
  }
  SUBCASE("K_override excludes a and c") {
    CHECK_THROWS_AS(parse_config(
                        R"({"name": "euclidean", "bounds": {"a": 0, "K_override": 1}})"),
                    ConfigError);
  }
  SUBCASE("semantic validation") {
    CHECK_THROWS_AS(parse_config(R"({"grid": {}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"name": "euclidean", "grid": {"r_min": -1.0}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"name": "euclidean", "tolerances": {"ode": 0.0}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"name": "euclidean", "checks": ["not_a_check"]})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"name": "euclidean", "bounds": {"a": 0.5}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(
        parse_config(
            R"({"model": {"warp": {"kind": "sin"}, "r_domain": [0.1, 3.5]}})"),
        ConfigError);
  }
  SUBCASE("custom model without a name") {
    const ScenarioConfig cfg = parse_config(
        R"({"model": {"warp": {"kind": "sinh"}, "n": 3, "r_domain": [0.1, 4.0]}})");
    CHECK(cfg.model.warp.kind == "sinh");
    CHECK(cfg.grid.r_max == 4.0);
    REQUIRE(cfg.bounds.has_value());
    CHECK(cfg.bounds->a == 0.0);  // trivial bounds by default
  }
}

TEST_CASE("registries") {
  const auto names = builtin_scenario_names();
  CHECK(names.size() == 5);
  for (const auto& n : names) CHECK_NOTHROW(builtin_scenario(n));
  CHECK_THROWS_AS(builtin_scenario("nope"), ConfigError);
  CHECK(registered_checks().size() == 16);
  // every built-in's explicit check list stays inside the registry
  const auto known = registered_checks();
  for (const auto& n : names)
    for (const auto& c : builtin_scenario(n).checks)
      CHECK(std::find(known.begin(), known.end(), c) != known.end());
}

TEST_CASE("euclidean scenario passes everything") {
  const RunReport rep = run_scenario(quick("euclidean"));
  CHECK(rep.pass);
  CHECK_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.hypothesis.all_hold());
  }
  REQUIRE(rep.growth_expected.has_value());
  CHECK(*rep.growth_expected == 3.0);
  CHECK(rep.growth_exponent == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(rep.volume_table.size() == 8);
  CHECK(rep.series_rows.size() == 40);
  CHECK(rep.wall_clock_ms > 0.0);
  // last volume row is the full ball
  CHECK(rep.volume_table.back()[0] == doctest::Approx(10.0));
  CHECK(rep.volume_table.back()[1] ==
        doctest::Approx(4.0 / 3.0 * M_PI * 1000.0).epsilon(1e-8));
  // normalized density column stays at 1
  for (const auto& row : rep.series_rows)
    CHECK(row[12] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cone scenario is the equality case") {
  const RunReport rep = run_scenario(quick("cone"));
  CHECK(rep.pass);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    if (c.name == "hessian_comparison" || c.name == "shape_comparison" ||
        c.name == "laplacian_comparison" || c.name == "mhess_bound")
      CHECK(std::abs(c.min_slack) < 1e-9);
  }
  const auto umb = std::find_if(
      rep.rigidity.begin(), rep.rigidity.end(),
      [](const RigidityResult& r) { return r.name == "umbilicity"; });
  REQUIRE(umb != rep.rigidity.end());
  CHECK(umb->verdict.kind == RigidityKind::umbilic_equality);
  REQUIRE(rep.growth_expected.has_value());
  CHECK(*rep.growth_expected == 5.0);
}

TEST_CASE("bounded density scenario passes with a flagged hypothesis") {
  const RunReport rep = run_scenario(quick("bounded_density"));
  CHECK(rep.pass);
  REQUIRE_FALSE(rep.checks.empty());
  const auto& hyp = rep.checks.front().hypothesis;
  CHECK(hyp.phi_in_range);
  CHECK(hyp.grad_bound_holds);
  CHECK_FALSE(hyp.sec_nonnegative);
  CHECK(hyp.min_weighted_sec < 0.0);
}

TEST_CASE("sphere and conical scenarios pass") {
  CHECK(run_scenario(quick("sphere_warp")).pass);
  const RunReport conical = run_scenario(quick("conical_rigidity"));
  CHECK(conical.pass);
  const auto con = std::find_if(
      conical.rigidity.begin(), conical.rigidity.end(),
      [](const RigidityResult& r) { return r.name == "conical_rigidity"; });
  REQUIRE(con != conical.rigidity.end());
  CHECK(con->verdict.kind == RigidityKind::conical_rigid);
}

TEST_CASE("a wrong comparison constant fails the run") {
  ScenarioConfig cfg = quick("cone");
  cfg.k_override = 1.0;
  cfg.checks = {"hessian_comparison", "shape_comparison"};
  const RunReport rep = run_scenario(cfg);
  CHECK_FALSE(rep.pass);
  for (const auto& c : rep.checks) {
    CHECK_FALSE(c.pass);
    CHECK(c.min_slack < 0.0);
    CHECK(c.argmin.r == doctest::Approx(cfg.grid.r_min));
  }
}

TEST_CASE("report serialization and file outputs") {
  const RunReport rep = run_scenario(quick("euclidean", 10));
  const nlohmann::json js = report_to_json(rep);
  CHECK(js["scenario"] == "euclidean");
  CHECK(js["pass"] == true);
  CHECK(js["checks"].is_array());
  CHECK(js["checks"][0].contains("hypothesis_status"));
  CHECK(js["checks"][0]["argmin"].contains("r"));
  CHECK(js["volumes"].size() == 8);
  CHECK(js["config_echo"]["grid"]["steps"] == 10);

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "radcomp_scenario_test";
  fs::remove_all(dir);
  emit_outputs(rep, dir.string());
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "volumes.csv"));

  std::ifstream series(dir / "series.csv");
  REQUIRE(series.good());
  std::string header;
  std::getline(series, header);
  CHECK(header ==
        "r,theta,A,S_tan,wS_tan,lap_r,wlap_r,mhess_rad,mhess_tan,gap_mhess,"
        "gap_hessian,gap_laplacian,norm_density,dlog_norm_density");
  int rows = 0;
  for (std::string line; std::getline(series, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 10);
  fs::remove_all(dir);
}

TEST_SUITE_END();
