#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "jscis/harness.hpp"

using namespace jscis;

TEST_CASE("empty config yields the headline defaults") {
  const Config cfg = parse_config("{}");
  CHECK(cfg.system.carrier_frequency == 28e9);
  CHECK(cfg.system.bandwidth == 800e6);
  CHECK(cfg.system.noise_psd == doctest::Approx(3.981e-21).epsilon(1e-3));
  CHECK(cfg.system.tx_gain == doctest::Approx(63.0957).epsilon(1e-4));
  CHECK(cfg.system.num_subframes == 10);
  CHECK(cfg.scenario.num_vehicles == 10);
  CHECK(cfg.scenario.max_distance == 200.0);
  CHECK(cfg.scenario.tx_power == 10.0);
  CHECK(cfg.aoi.sinr_threshold == 5.0);
  CHECK(cfg.aoi.aoi_max == 4.0);
  CHECK(cfg.penalty_eta == 0.0);  // auto: eta_tilde * T
  CHECK(cfg.capacity_mode == CapacityMode::Literal);
  CHECK(!cfg.apply_c3);
  CHECK(cfg.experiment.id == "custom");
}

TEST_CASE("auto penalty resolves to eta_tilde * T") {
  const Config cfg = parse_config("{}");
  const GameConfig gc = cfg.game_config(3);
  CHECK(gc.penalty_eta ==
        doctest::Approx(1e10 * cfg.system.frame_duration));
  const Config fixed = parse_config(R"({"game": {"penalty_eta": 5.0}})");
  CHECK(fixed.game_config(3).penalty_eta == 5.0);
}

TEST_CASE("db fields round-trip through linear storage") {
  const Config cfg = parse_config(
      R"({"system": {"tx_gain_db": 18.0, "noise_psd_dbm_hz": -174.0}})");
  CHECK(cfg.system.tx_gain == doctest::Approx(std::pow(10.0, 1.8)));
  CHECK(cfg.system.noise_psd ==
        doctest::Approx(std::pow(10.0, -17.4) * 1e-3));
}

TEST_CASE("invalid values are named in the error") {
  try {
    parse_config(R"({"system": {"bandwidth_b": -1.0}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bandwidth_B") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config(R"({"scenario": {"tx_power": 0}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"aoi": {"arrival_rate": -0.5}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config("[]"), ConfigError);
}

TEST_CASE("unknown keys are rejected everywhere") {
  CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"system": {"bogus": 1}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"game": {"annealing": {"bogus": 1}}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": {"id": "no-such"}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"rcs_case": "diag"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"experiment": {"format": "xml"}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"game": {"capacity_mode": "loose"}})"),
                  ConfigError);
}

TEST_CASE("dump_config is a round-trip fixpoint") {
  const std::string text = R"({
    "system": {"bandwidth_b": 4e8, "num_subframes_ns": 8},
    "scenario": {"num_vehicles": 4},
    "rcs_case": "cross_half",
    "game": {"capacity_mode": "consistent", "apply_c3": true},
    "experiment": {"id": "aoi-sweep", "seeds": [3, 4], "format": "jsonl"}
  })";
  const Config a = parse_config(text);
  const std::string dumped = dump_config(a);
  const Config b = parse_config(dumped);
  CHECK(dump_config(b) == dumped);
  CHECK(b.system.bandwidth == 4e8);
  CHECK(b.rcs_case == RcsCase::CrossHalf);
  CHECK(b.capacity_mode == CapacityMode::Consistent);
  CHECK(b.experiment.seeds == std::vector<std::uint64_t>{3, 4});
  CHECK(b.experiment.format == OutputFormat::JsonLines);
}

TEST_CASE("experiment id catalogue") {
  const auto& ids = experiment_ids();
  CHECK(ids.size() == 9);
  for (const auto& id : ids) {
    const Config cfg = parse_config(R"({"experiment": {"id": ")" + id + "\"}}");
    CHECK(cfg.experiment.id == id);
  }
}

TEST_CASE("csv emission is stable and header-only for empty tables") {
  ResultTable t;
  t.name = "demo";
  t.columns = {{"x", ""}, {"label", ""}, {"v", "bits"}};
  std::ostringstream empty;
  emit(t, OutputFormat::Csv, empty);
  CHECK(empty.str() == "x,label,v\n");

  t.add_row({std::int64_t{3}, std::string("abc"), 0.125});
  t.add_row({std::int64_t{-1}, std::string("d"), 1e-12});
  std::ostringstream a, b;
  emit(t, OutputFormat::Csv, a);
  emit(t, OutputFormat::Csv, b);
  CHECK(a.str() == b.str());
  CHECK(a.str() == "x,label,v\n3,abc,0.125\n-1,d,1e-12\n");
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::invalid_argument);
}

TEST_CASE("jsonl emission carries one object per row") {
  ResultTable t;
  t.name = "demo";
  t.columns = {{"k", ""}, {"v", ""}};
  t.add_row({std::int64_t{1}, 0.5});
  std::ostringstream os;
  emit(t, OutputFormat::JsonLines, os);
  const std::string out = os.str();
  CHECK(out.find("\"k\"") != std::string::npos);
  CHECK(out.find("0.5") != std::string::npos);
  CHECK(out.back() == '\n');
  CHECK(std::count(out.begin(), out.end(), '\n') == 1);
}

TEST_CASE("analytic presets are deterministic") {
  const Config cfg = parse_config(R"({"experiment": {"id": "aoi-sweep"}})");
  const ExperimentResult a = run_experiment(cfg);
  const ExperimentResult b = run_experiment(cfg);
  REQUIRE(a.tables.size() == 1);
  CHECK(a.tables[0].name == "aoi_sweep");
  CHECK(a.tables[0].rows.size() == 9);
  std::ostringstream sa, sb;
  emit(a.tables[0], OutputFormat::Csv, sa);
  emit(b.tables[0], OutputFormat::Csv, sb);
  CHECK(sa.str() == sb.str());
  CHECK(!a.tables[0].config_hash.empty());
}

TEST_CASE("packet-loss preset spans the ratio grid times the density grid") {
  const Config cfg =
      parse_config(R"({"experiment": {"id": "packet-loss-sweep"}})");
  const ExperimentResult r = run_experiment(cfg);
  REQUIRE(r.tables.size() == 1);
  CHECK(r.tables[0].rows.size() == 9 * 5);
}

TEST_CASE("game presets run end-to-end on a small fleet") {
  const Config cfg = parse_config(R"({
    "scenario": {"num_vehicles": 3},
    "experiment": {"id": "custom", "seeds": [1, 2]}
  })");
  const ExperimentResult r = run_experiment(cfg);
  REQUIRE(r.tables.size() == 1);
  CHECK(r.tables[0].rows.size() == 2);
  // byte-identical re-run
  const ExperimentResult r2 = run_experiment(cfg);
  std::ostringstream a, b;
  emit(r.tables[0], OutputFormat::Csv, a);
  emit(r2.tables[0], OutputFormat::Csv, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("convergence trace utilities increase within each seed") {
  const Config cfg = parse_config(R"({
    "scenario": {"num_vehicles": 4},
    "experiment": {"id": "ctra-convergence", "seeds": [5]}
  })");
  const ExperimentResult r = run_experiment(cfg);
  REQUIRE(r.tables.size() == 1);
  const auto& rows = r.tables[0].rows;
  REQUIRE(!rows.empty());
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::get<double>(rows[i][3]) > std::get<double>(rows[i - 1][3]));
}

TEST_CASE("load_config reports missing files") {
  CHECK_THROWS_AS(load_config("/no/such/file.json"), ConfigError);
}
