#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jscis/harness.hpp"

// Exit codes: 0 success, 1 config error, 2 runtime error,
// 3 converged but infeasible game.

namespace {

struct CommonOpts {
  std::string config_path;
  std::vector<std::uint64_t> seeds;
  std::string out_dir;
  std::string format;
  std::string experiment;
  std::string mode;
  std::string c3;
};

jscis::Config effective_config(const CommonOpts& opts) {
  jscis::Config cfg = opts.config_path.empty()
                          ? jscis::parse_config("{}")
                          : jscis::load_config(opts.config_path);
  if (!opts.seeds.empty()) cfg.experiment.seeds = opts.seeds;
  if (!opts.out_dir.empty()) cfg.experiment.out_dir = opts.out_dir;
  if (!opts.experiment.empty()) {
    bool known = false;
    for (const auto& id : jscis::experiment_ids())
      if (id == opts.experiment) known = true;
    if (!known)
      throw jscis::ConfigError("config error: unknown experiment id '" +
                               opts.experiment + "'");
    cfg.experiment.id = opts.experiment;
  }
  if (!opts.format.empty()) {
    if (opts.format == "csv")
      cfg.experiment.format = jscis::OutputFormat::Csv;
    else if (opts.format == "jsonl")
      cfg.experiment.format = jscis::OutputFormat::JsonLines;
    else
      throw jscis::ConfigError("config error: --format must be csv|jsonl");
  }
  if (!opts.mode.empty()) {
    if (opts.mode == "literal")
      cfg.capacity_mode = jscis::CapacityMode::Literal;
    else if (opts.mode == "consistent")
      cfg.capacity_mode = jscis::CapacityMode::Consistent;
    else
      throw jscis::ConfigError("config error: --mode must be literal|consistent");
  }
  if (!opts.c3.empty()) {
    if (opts.c3 == "on")
      cfg.apply_c3 = true;
    else if (opts.c3 == "off")
      cfg.apply_c3 = false;
    else
      throw jscis::ConfigError("config error: --c3 must be on|off");
  }
  return cfg;
}

int cmd_run(const CommonOpts& opts) {
  const jscis::Config cfg = effective_config(opts);
  if (!cfg.experiment.out_dir.empty())
    std::filesystem::create_directories(cfg.experiment.out_dir);
  const jscis::ExperimentResult result = jscis::run_experiment(cfg);
  for (const auto& table : result.tables) {
    const std::string path =
        jscis::emit_path(table, cfg.experiment.format, cfg.experiment.out_dir);
    std::cout << "wrote " << path << " (" << table.rows.size() << " rows)\n";
  }
  if (result.any_infeasible) {
    std::cerr << "warning: at least one game run converged infeasible (C2 "
                 "violated)\n";
    return 3;
  }
  return 0;
}

int cmd_validate(const CommonOpts& opts) {
  const jscis::Config cfg = effective_config(opts);
  std::cout << jscis::dump_config(cfg);
  return 0;
}

int cmd_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read table file: " + path);
  std::string line;
  if (path.size() > 6 && path.substr(path.size() - 6) == ".jsonl") {
    std::size_t rows = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++rows;
    std::cout << path << ": " << rows << " rows (json-lines)\n";
    return 0;
  }
  if (!std::getline(in, line)) {
    std::cout << path << ": empty file\n";
    return 0;
  }
  std::vector<std::string> headers;
  std::stringstream hs(line);
  std::string field;
  while (std::getline(hs, field, ',')) headers.push_back(field);

  std::size_t rows = 0;
  std::vector<double> min_v(headers.size(), 0), max_v(headers.size(), 0);
  std::vector<double> sum_v(headers.size(), 0);
  std::vector<std::size_t> numeric(headers.size(), 0);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::stringstream ls(line);
    std::size_t c = 0;
    while (std::getline(ls, field, ',') && c < headers.size()) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos == field.size()) {
          if (numeric[c] == 0) { min_v[c] = max_v[c] = v; }
          min_v[c] = std::min(min_v[c], v);
          max_v[c] = std::max(max_v[c], v);
          sum_v[c] += v;
          ++numeric[c];
        }
      } catch (...) {
      }
      ++c;
    }
  }
  std::cout << path << ": " << rows << " rows, " << headers.size()
            << " columns\n";
  for (std::size_t c = 0; c < headers.size(); ++c) {
    std::cout << "  " << headers[c];
    if (numeric[c] > 0)
      std::cout << ": min=" << min_v[c] << " max=" << max_v[c]
                << " mean=" << sum_v[c] / numeric[c];
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JSCIS time-allocation simulator and solver"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string report_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "Config file (JSON)");
    cmd->add_option("--seed", opts.seeds, "Seed (repeatable)");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--format", opts.format, "Output format: csv|jsonl");
    cmd->add_option("--experiment", opts.experiment, "Experiment preset id");
    cmd->add_option("--mode", opts.mode, "Capacity mode: literal|consistent");
    cmd->add_option("--c3", opts.c3, "AoI feasibility filter: on|off");
  };

  CLI::App* run = app.add_subcommand("run", "Execute an experiment preset");
  add_common(run);
  CLI::App* validate =
      app.add_subcommand("validate", "Check a config and print the effective one");
  add_common(validate);
  CLI::App* report = app.add_subcommand("report", "Summarize a result table");
  report->add_option("table", report_path, "Path to a .csv or .jsonl table")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    if (run->parsed()) return cmd_run(opts);
    if (validate->parsed()) return cmd_validate(opts);
    if (report->parsed()) return cmd_report(report_path);
  } catch (const jscis::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const jscis::InfeasibleGameError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
