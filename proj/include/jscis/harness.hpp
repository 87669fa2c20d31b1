#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jscis/aoi.hpp"
#include "jscis/channel.hpp"
#include "jscis/game.hpp"
#include "jscis/model.hpp"

// Experiment runner: config ingestion, seeded presets, structured tables.

namespace jscis {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleGameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, JsonLines };

struct ExperimentSpec {
  std::string id = "custom";
  std::vector<std::uint64_t> seeds = {1};
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Csv;
  int random_samples = 100;  // budget for the random baseline
  std::vector<int> vehicle_counts = {5, 10, 15};  // algorithm-comparison sweep
  std::vector<int> subframe_counts = {5, 10};     // subframe-sweep
};

struct Config {
  SystemParams system;
  ScenarioSpec scenario;
  RcsCase rcs_case = RcsCase::AllOne;
  AoiParams aoi;
  double penalty_eta = 0.0;  // 0 = eta_tilde * T
  CapacityMode capacity_mode = CapacityMode::Literal;
  bool apply_c3 = false;
  int max_iterations = 1000;
  AnnealingSchedule annealing;
  ExperimentSpec experiment;

  GameConfig game_config(int num_vehicles) const;
};

const std::vector<std::string>& experiment_ids();

// Parses and validates a config file; unknown keys are rejected.
// Throws ConfigError with the offending field.
Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

// Canonical serialization of the effective config (round-trip fixpoint).
std::string dump_config(const Config& cfg);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Column {
  std::string name;
  std::string unit;  // empty for dimensionless
};

struct ResultTable {
  std::string name;
  std::string config_hash;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct ExperimentResult {
  std::vector<ResultTable> tables;
  bool any_infeasible = false;  // some game run violated C2 at convergence
};

ExperimentResult run_experiment(const Config& cfg);

// Bit-stable emission: fixed column order, 12 significant digits, LF endings.
void emit(const ResultTable& table, OutputFormat format, std::ostream& os);
std::string emit_path(const ResultTable& table, OutputFormat format,
                      const std::string& out_dir);

}  // namespace jscis
