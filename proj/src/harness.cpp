#include "jscis/harness.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace jscis {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void config_fail(const std::string& msg) {
  throw ConfigError("config error: " + msg);
}

void reject_unknown(const ordered_json& obj, const std::string& section,
                    const std::vector<std::string>& known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool found = false;
    for (const auto& k : known)
      if (it.key() == k) { found = true; break; }
    if (!found) config_fail("unknown key '" + it.key() + "' in " + section);
  }
}

double get_num(const ordered_json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) config_fail(key + " must be a number");
  return obj[key].get<double>();
}

int get_int(const ordered_json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) config_fail(key + " must be an integer");
  return obj[key].get<int>();
}

bool get_bool(const ordered_json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) config_fail(key + " must be a boolean");
  return obj[key].get<bool>();
}

std::string get_str(const ordered_json& obj, const std::string& key,
                    const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) config_fail(key + " must be a string");
  return obj[key].get<std::string>();
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

RcsCase rcs_case_from_string(const std::string& s) {
  if (s == "all_one") return RcsCase::AllOne;
  if (s == "cross_half") return RcsCase::CrossHalf;
  if (s == "cross_two") return RcsCase::CrossTwo;
  if (s == "cross_random") return RcsCase::CrossRandom;
  config_fail("rcs_case must be one of all_one|cross_half|cross_two|cross_random");
}

std::string rcs_case_to_string(RcsCase c) {
  switch (c) {
    case RcsCase::AllOne: return "all_one";
    case RcsCase::CrossHalf: return "cross_half";
    case RcsCase::CrossTwo: return "cross_two";
    case RcsCase::CrossRandom: return "cross_random";
  }
  return "all_one";
}

std::string format_double(double v) {
  char buf[64];
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string cell_to_string(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell))
    return std::to_string(std::get<std::int64_t>(cell));
  if (std::holds_alternative<double>(cell))
    return format_double(std::get<double>(cell));
  return std::get<std::string>(cell);
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_string(const std::string& data) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a(data));
  return buf;
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {
      "packet-loss-sweep", "aoi-sweep",      "ctra-convergence",
      "capacity-report",   "algorithm-comparison", "subframe-sweep",
      "rcs-cases",         "strategy-trace", "custom"};
  return ids;
}

GameConfig Config::game_config(int num_vehicles) const {
  GameConfig gc = default_game_config(system, num_vehicles);
  if (penalty_eta > 0) gc.penalty_eta = penalty_eta;
  gc.capacity_mode = capacity_mode;
  gc.apply_c3_filter = apply_c3;
  gc.max_iterations = max_iterations;
  if (apply_c3) jscis::apply_c3_filter(gc, aoi);
  return gc;
}

Config parse_config(const std::string& json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    config_fail(std::string("parse failure: ") + e.what());
  }
  if (!root.is_object()) config_fail("top level must be an object");
  reject_unknown(root, "top level",
                 {"system", "scenario", "rcs_case", "aoi", "game", "experiment"});

  Config cfg;

  if (root.contains("system")) {
    const auto& s = root["system"];
    reject_unknown(s, "system",
                   {"carrier_frequency", "bandwidth_b", "noise_psd_dbm_hz",
                    "tx_gain_db", "rx_gain_db", "main_lobe_width_phi",
                    "frame_duration_t", "num_subframes_ns"});
    cfg.system.carrier_frequency =
        get_num(s, "carrier_frequency", cfg.system.carrier_frequency);
    cfg.system.bandwidth = get_num(s, "bandwidth_b", cfg.system.bandwidth);
    if (s.contains("noise_psd_dbm_hz"))
      cfg.system.noise_psd = db_to_linear(s["noise_psd_dbm_hz"].get<double>()) * 1e-3;
    if (s.contains("tx_gain_db"))
      cfg.system.tx_gain = db_to_linear(s["tx_gain_db"].get<double>());
    if (s.contains("rx_gain_db"))
      cfg.system.rx_gain = db_to_linear(s["rx_gain_db"].get<double>());
    cfg.system.main_lobe_width =
        get_num(s, "main_lobe_width_phi", cfg.system.main_lobe_width);
    cfg.system.frame_duration =
        get_num(s, "frame_duration_t", cfg.system.frame_duration);
    cfg.system.num_subframes =
        get_int(s, "num_subframes_ns", cfg.system.num_subframes);
  }
  try {
    cfg.system.validate();
  } catch (const std::invalid_argument& e) {
    config_fail(e.what());
  }

  if (root.contains("scenario")) {
    const auto& s = root["scenario"];
    reject_unknown(s, "scenario",
                   {"num_vehicles", "road_length", "lane_separation",
                    "target_lead", "max_distance", "tx_power",
                    "shadow_sigma_db", "comm_partner"});
    cfg.scenario.num_vehicles = get_int(s, "num_vehicles", cfg.scenario.num_vehicles);
    cfg.scenario.road_length = get_num(s, "road_length", cfg.scenario.road_length);
    cfg.scenario.lane_separation =
        get_num(s, "lane_separation", cfg.scenario.lane_separation);
    cfg.scenario.target_lead = get_num(s, "target_lead", cfg.scenario.target_lead);
    cfg.scenario.max_distance = get_num(s, "max_distance", cfg.scenario.max_distance);
    cfg.scenario.tx_power = get_num(s, "tx_power", cfg.scenario.tx_power);
    cfg.scenario.shadow_sigma_db =
        get_num(s, "shadow_sigma_db", cfg.scenario.shadow_sigma_db);
    if (s.contains("comm_partner")) {
      if (!s["comm_partner"].is_array()) config_fail("comm_partner must be an array");
      cfg.scenario.comm_partner = s["comm_partner"].get<std::vector<int>>();
    }
    if (cfg.scenario.num_vehicles < 1) config_fail("num_vehicles must be >= 1");
    if (cfg.scenario.tx_power <= 0) config_fail("tx_power must be positive");
  }

  if (root.contains("rcs_case"))
    cfg.rcs_case = rcs_case_from_string(get_str(root, "rcs_case", "all_one"));

  if (root.contains("aoi")) {
    const auto& s = root["aoi"];
    reject_unknown(s, "aoi",
                   {"arrival_rate", "service_rate", "sinr_threshold",
                    "network_density", "link_distance", "path_loss_exponent",
                    "aoi_max"});
    cfg.aoi.arrival_rate = get_num(s, "arrival_rate", cfg.aoi.arrival_rate);
    cfg.aoi.service_rate = get_num(s, "service_rate", cfg.aoi.service_rate);
    cfg.aoi.sinr_threshold = get_num(s, "sinr_threshold", cfg.aoi.sinr_threshold);
    cfg.aoi.network_density = get_num(s, "network_density", cfg.aoi.network_density);
    cfg.aoi.link_distance = get_num(s, "link_distance", cfg.aoi.link_distance);
    cfg.aoi.path_loss_exponent =
        get_num(s, "path_loss_exponent", cfg.aoi.path_loss_exponent);
    cfg.aoi.aoi_max = get_num(s, "aoi_max", cfg.aoi.aoi_max);
    cfg.aoi.main_lobe_width = cfg.system.main_lobe_width;
    try {
      cfg.aoi.validate();
    } catch (const std::invalid_argument& e) {
      config_fail(e.what());
    }
  } else {
    cfg.aoi.main_lobe_width = cfg.system.main_lobe_width;
  }

  if (root.contains("game")) {
    const auto& s = root["game"];
    reject_unknown(s, "game",
                   {"penalty_eta", "capacity_mode", "apply_c3", "max_iterations",
                    "annealing"});
    cfg.penalty_eta = get_num(s, "penalty_eta", cfg.penalty_eta);
    const std::string mode = get_str(s, "capacity_mode", "literal");
    if (mode == "literal") cfg.capacity_mode = CapacityMode::Literal;
    else if (mode == "consistent") cfg.capacity_mode = CapacityMode::Consistent;
    else config_fail("capacity_mode must be literal|consistent");
    cfg.apply_c3 = get_bool(s, "apply_c3", cfg.apply_c3);
    cfg.max_iterations = get_int(s, "max_iterations", cfg.max_iterations);
    if (cfg.max_iterations < 1) config_fail("max_iterations must be >= 1");
    if (s.contains("annealing")) {
      const auto& a = s["annealing"];
      reject_unknown(a, "game.annealing",
                     {"initial_temp_fraction", "cooling",
                      "proposals_per_temperature", "floor_fraction"});
      cfg.annealing.initial_temp_fraction =
          get_num(a, "initial_temp_fraction", cfg.annealing.initial_temp_fraction);
      cfg.annealing.cooling = get_num(a, "cooling", cfg.annealing.cooling);
      cfg.annealing.proposals_per_temperature = get_int(
          a, "proposals_per_temperature", cfg.annealing.proposals_per_temperature);
      cfg.annealing.floor_fraction =
          get_num(a, "floor_fraction", cfg.annealing.floor_fraction);
    }
  }

  if (root.contains("experiment")) {
    const auto& s = root["experiment"];
    reject_unknown(s, "experiment",
                   {"id", "seeds", "out", "format", "random_samples",
                    "vehicle_counts", "subframe_counts"});
    cfg.experiment.id = get_str(s, "id", cfg.experiment.id);
    bool known = false;
    for (const auto& id : experiment_ids())
      if (id == cfg.experiment.id) known = true;
    if (!known) config_fail("unknown experiment id '" + cfg.experiment.id + "'");
    if (s.contains("seeds")) {
      if (!s["seeds"].is_array() || s["seeds"].empty())
        config_fail("seeds must be a non-empty array");
      cfg.experiment.seeds = s["seeds"].get<std::vector<std::uint64_t>>();
    }
    cfg.experiment.out_dir = get_str(s, "out", cfg.experiment.out_dir);
    const std::string fmt = get_str(s, "format", "csv");
    if (fmt == "csv") cfg.experiment.format = OutputFormat::Csv;
    else if (fmt == "jsonl") cfg.experiment.format = OutputFormat::JsonLines;
    else config_fail("format must be csv|jsonl");
    cfg.experiment.random_samples =
        get_int(s, "random_samples", cfg.experiment.random_samples);
    if (cfg.experiment.random_samples < 1)
      config_fail("random_samples must be >= 1");
    if (s.contains("vehicle_counts"))
      cfg.experiment.vehicle_counts = s["vehicle_counts"].get<std::vector<int>>();
    if (s.contains("subframe_counts"))
      cfg.experiment.subframe_counts = s["subframe_counts"].get<std::vector<int>>();
  }

  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_fail("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const Config& cfg) {
  ordered_json root;
  root["system"] = {
      {"carrier_frequency", cfg.system.carrier_frequency},
      {"bandwidth_b", cfg.system.bandwidth},
      {"noise_psd_dbm_hz", linear_to_db(cfg.system.noise_psd * 1e3)},
      {"tx_gain_db", linear_to_db(cfg.system.tx_gain)},
      {"rx_gain_db", linear_to_db(cfg.system.rx_gain)},
      {"main_lobe_width_phi", cfg.system.main_lobe_width},
      {"frame_duration_t", cfg.system.frame_duration},
      {"num_subframes_ns", cfg.system.num_subframes}};
  root["scenario"] = {{"num_vehicles", cfg.scenario.num_vehicles},
                      {"road_length", cfg.scenario.road_length},
                      {"lane_separation", cfg.scenario.lane_separation},
                      {"target_lead", cfg.scenario.target_lead},
                      {"max_distance", cfg.scenario.max_distance},
                      {"tx_power", cfg.scenario.tx_power},
                      {"shadow_sigma_db", cfg.scenario.shadow_sigma_db}};
  if (!cfg.scenario.comm_partner.empty())
    root["scenario"]["comm_partner"] = cfg.scenario.comm_partner;
  root["rcs_case"] = rcs_case_to_string(cfg.rcs_case);
  root["aoi"] = {{"arrival_rate", cfg.aoi.arrival_rate},
                 {"service_rate", cfg.aoi.service_rate},
                 {"sinr_threshold", cfg.aoi.sinr_threshold},
                 {"network_density", cfg.aoi.network_density},
                 {"link_distance", cfg.aoi.link_distance},
                 {"path_loss_exponent", cfg.aoi.path_loss_exponent},
                 {"aoi_max", cfg.aoi.aoi_max}};
  root["game"] = {
      {"penalty_eta", cfg.penalty_eta},
      {"capacity_mode",
       cfg.capacity_mode == CapacityMode::Literal ? "literal" : "consistent"},
      {"apply_c3", cfg.apply_c3},
      {"max_iterations", cfg.max_iterations},
      {"annealing",
       {{"initial_temp_fraction", cfg.annealing.initial_temp_fraction},
        {"cooling", cfg.annealing.cooling},
        {"proposals_per_temperature", cfg.annealing.proposals_per_temperature},
        {"floor_fraction", cfg.annealing.floor_fraction}}}};
  ordered_json exp = {{"id", cfg.experiment.id},
                      {"seeds", cfg.experiment.seeds},
                      {"out", cfg.experiment.out_dir},
                      {"format", cfg.experiment.format == OutputFormat::Csv
                                     ? "csv"
                                     : "jsonl"},
                      {"random_samples", cfg.experiment.random_samples},
                      {"vehicle_counts", cfg.experiment.vehicle_counts},
                      {"subframe_counts", cfg.experiment.subframe_counts}};
  root["experiment"] = exp;
  return root.dump(2) + "\n";
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("row width does not match table schema");
  rows.push_back(std::move(row));
}

namespace {

struct RunContext {
  const Config& cfg;
  bool any_infeasible = false;

  Scenario scenario(int n, int /*ns unused*/, std::uint64_t seed,
                    RcsCase rcs) const {
    ScenarioSpec spec = cfg.scenario;
    spec.num_vehicles = n;
    if (static_cast<int>(spec.comm_partner.size()) != n) spec.comm_partner.clear();
    return build_scenario(spec, cfg.system, rcs, seed);
  }
};

ResultTable make_table(const Config& cfg, const std::string& name,
                       std::vector<Column> columns) {
  ResultTable t;
  t.name = name;
  t.config_hash = hash_string(dump_config(cfg));
  t.columns = std::move(columns);
  return t;
}

ResultTable preset_packet_loss(const Config& cfg) {
  ResultTable t = make_table(cfg, "packet_loss_sweep",
                             {{"ratio_a", ""},
                              {"network_density", "vehicles/m^2"},
                              {"p_success", ""},
                              {"p_loss", ""}});
  const std::vector<double> densities = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  for (int k = 1; k <= cfg.system.num_subframes - 1; ++k) {
    const double a = static_cast<double>(k) / cfg.system.num_subframes;
    for (double density : densities) {
      AoiParams p = cfg.aoi;
      p.network_density = density;
      const double ps = success_probability(p, a);
      t.add_row({a, density, ps, 1.0 - ps});
    }
  }
  return t;
}

ResultTable preset_aoi_sweep(const Config& cfg) {
  ResultTable t = make_table(cfg, "aoi_sweep",
                             {{"ratio_a", ""},
                              {"p_success", ""},
                              {"rho_prime", ""},
                              {"average_aoi", "1/mu"}});
  for (int k = 1; k <= cfg.system.num_subframes - 1; ++k) {
    const double a = static_cast<double>(k) / cfg.system.num_subframes;
    const double p = success_probability(cfg.aoi, a);
    const double rho = p * cfg.aoi.arrival_rate / cfg.aoi.service_rate;
    double aoi = std::numeric_limits<double>::infinity();
    if (rho > 0 && rho < 1) aoi = average_aoi_mm1(rho, cfg.aoi.service_rate);
    t.add_row({a, p, rho, aoi});
  }
  return t;
}

ResultTable preset_ctra_convergence(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "ctra_convergence",
                             {{"seed", ""},
                              {"update", ""},
                              {"iteration", ""},
                              {"utility", "bits/frame"}});
  for (std::uint64_t seed : cfg.experiment.seeds) {
    const Scenario sc =
        ctx.scenario(cfg.scenario.num_vehicles, 0, seed, cfg.rcs_case);
    const GameRun run =
        ctra_solve(sc, cfg.system, cfg.game_config(sc.num_vehicles));
    if (!run.feasible) ctx.any_infeasible = true;
    for (std::size_t u = 0; u < run.trajectory.size(); ++u)
      t.add_row({static_cast<std::int64_t>(seed), static_cast<std::int64_t>(u),
                 static_cast<std::int64_t>(run.trajectory[u].iteration),
                 run.trajectory[u].utility});
  }
  return t;
}

ResultTable preset_capacity_report(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "capacity_report",
                             {{"seed", ""},
                              {"vehicle", ""},
                              {"ratio_a", ""},
                              {"radar_mi", "bits/frame"},
                              {"comm_capacity", "bits/frame"},
                              {"c2_satisfied", ""}});
  for (std::uint64_t seed : cfg.experiment.seeds) {
    const Scenario sc =
        ctx.scenario(cfg.scenario.num_vehicles, 0, seed, cfg.rcs_case);
    const GameRun run =
        ctra_solve(sc, cfg.system, cfg.game_config(sc.num_vehicles));
    if (!run.feasible) ctx.any_infeasible = true;
    const Totals tot =
        totals(sc, cfg.system, run.final_profile, cfg.capacity_mode);
    for (int i = 0; i < sc.num_vehicles; ++i)
      t.add_row({static_cast<std::int64_t>(seed), static_cast<std::int64_t>(i),
                 run.final_profile.ratio(i), tot.per_vehicle[i].radar_mi,
                 tot.per_vehicle[i].comm_capacity,
                 static_cast<std::int64_t>(tot.per_vehicle[i].c2_satisfied)});
  }
  return t;
}

void comparison_rows(const Config& cfg, RunContext& ctx, ResultTable& t,
                     const Scenario& sc, const SystemParams& params,
                     const GameConfig& gc, std::uint64_t seed,
                     const std::vector<Cell>& prefix) {
  const GameRun ctra = ctra_solve(sc, params, gc);
  if (!ctra.feasible) ctx.any_infeasible = true;
  const BaselineResult absa =
      baseline_annealing(sc, params, gc, cfg.annealing, seed);
  const BaselineResult rnd =
      baseline_random(sc, params, gc, cfg.experiment.random_samples, seed);
  const BaselineResult uni = baseline_uniform(sc, params, gc);

  auto emit_row = [&](const std::string& algorithm, double radar_mi, double u,
                      std::int64_t iterations, bool feasible) {
    std::vector<Cell> row = prefix;
    row.push_back(algorithm);
    row.push_back(static_cast<std::int64_t>(seed));
    row.push_back(radar_mi);
    row.push_back(u);
    row.push_back(iterations);
    row.push_back(static_cast<std::int64_t>(feasible));
    t.add_row(std::move(row));
  };
  emit_row("ctra", ctra.final_radar_mi, ctra.final_utility, ctra.iterations,
           ctra.feasible);
  emit_row("absa", absa.radar_mi, absa.utility, 0, absa.positive);
  emit_row("random", rnd.radar_mi, rnd.utility, 0, rnd.positive);
  emit_row("uniform", uni.radar_mi, uni.utility, 0, uni.positive);
}

ResultTable preset_algorithm_comparison(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "algorithm_comparison",
                             {{"num_vehicles", ""},
                              {"algorithm", ""},
                              {"seed", ""},
                              {"total_radar_mi", "bits/frame"},
                              {"utility", "bits/frame"},
                              {"iterations", ""},
                              {"feasible", ""}});
  for (int n : cfg.experiment.vehicle_counts)
    for (std::uint64_t seed : cfg.experiment.seeds) {
      const Scenario sc = ctx.scenario(n, 0, seed, cfg.rcs_case);
      comparison_rows(cfg, ctx, t, sc, cfg.system, cfg.game_config(n), seed,
                      {static_cast<std::int64_t>(n)});
    }
  return t;
}

ResultTable preset_subframe_sweep(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "subframe_sweep",
                             {{"num_subframes", ""},
                              {"algorithm", ""},
                              {"seed", ""},
                              {"total_radar_mi", "bits/frame"},
                              {"utility", "bits/frame"},
                              {"iterations", ""},
                              {"feasible", ""}});
  for (int ns : cfg.experiment.subframe_counts) {
    Config swept = cfg;
    swept.system.num_subframes = ns;
    for (std::uint64_t seed : cfg.experiment.seeds) {
      const Scenario sc =
          ctx.scenario(cfg.scenario.num_vehicles, ns, seed, cfg.rcs_case);
      comparison_rows(swept, ctx, t, sc, swept.system,
                      swept.game_config(sc.num_vehicles), seed,
                      {static_cast<std::int64_t>(ns)});
    }
  }
  return t;
}

ResultTable preset_rcs_cases(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "rcs_cases",
                             {{"rcs_case", ""},
                              {"algorithm", ""},
                              {"seed", ""},
                              {"total_radar_mi", "bits/frame"},
                              {"utility", "bits/frame"},
                              {"iterations", ""},
                              {"feasible", ""}});
  const RcsCase cases[] = {RcsCase::AllOne, RcsCase::CrossHalf, RcsCase::CrossTwo,
                           RcsCase::CrossRandom};
  for (RcsCase c : cases)
    for (std::uint64_t seed : cfg.experiment.seeds) {
      const Scenario sc =
          ctx.scenario(cfg.scenario.num_vehicles, 0, seed, c);
      comparison_rows(cfg, ctx, t, sc, cfg.system,
                      cfg.game_config(sc.num_vehicles), seed,
                      {rcs_case_to_string(c)});
    }
  return t;
}

ResultTable preset_strategy_trace(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "strategy_trace",
                             {{"seed", ""},
                              {"update", ""},
                              {"iteration", ""},
                              {"vehicle", ""},
                              {"ratio_a", ""}});
  for (std::uint64_t seed : cfg.experiment.seeds) {
    const Scenario sc =
        ctx.scenario(cfg.scenario.num_vehicles, 0, seed, cfg.rcs_case);
    const GameRun run =
        ctra_solve(sc, cfg.system, cfg.game_config(sc.num_vehicles));
    if (!run.feasible) ctx.any_infeasible = true;
    for (std::size_t u = 0; u < run.trajectory.size(); ++u)
      for (int i = 0; i < sc.num_vehicles; ++i)
        t.add_row({static_cast<std::int64_t>(seed), static_cast<std::int64_t>(u),
                   static_cast<std::int64_t>(run.trajectory[u].iteration),
                   static_cast<std::int64_t>(i),
                   run.trajectory[u].profile.ratio(i)});
  }
  return t;
}

ResultTable preset_custom(const Config& cfg, RunContext& ctx) {
  ResultTable t = make_table(cfg, "custom_run",
                             {{"seed", ""},
                              {"num_vehicles", ""},
                              {"total_radar_mi", "bits/frame"},
                              {"total_comm_capacity", "bits/frame"},
                              {"utility", "bits/frame"},
                              {"iterations", ""},
                              {"feasible", ""}});
  for (std::uint64_t seed : cfg.experiment.seeds) {
    const Scenario sc =
        ctx.scenario(cfg.scenario.num_vehicles, 0, seed, cfg.rcs_case);
    const GameRun run =
        ctra_solve(sc, cfg.system, cfg.game_config(sc.num_vehicles));
    if (!run.feasible) ctx.any_infeasible = true;
    const Totals tot =
        totals(sc, cfg.system, run.final_profile, cfg.capacity_mode);
    t.add_row({static_cast<std::int64_t>(seed),
               static_cast<std::int64_t>(sc.num_vehicles), tot.radar_mi_total,
               tot.comm_capacity_total, run.final_utility,
               static_cast<std::int64_t>(run.iterations),
               static_cast<std::int64_t>(run.feasible)});
  }
  return t;
}

}  // namespace

ExperimentResult run_experiment(const Config& cfg) {
  if (cfg.experiment.seeds.empty())
    throw ConfigError("config error: seeds must be non-empty");
  RunContext ctx{cfg};
  ExperimentResult result;
  const std::string& id = cfg.experiment.id;
  try {
    if (id == "packet-loss-sweep")
      result.tables.push_back(preset_packet_loss(cfg));
    else if (id == "aoi-sweep")
      result.tables.push_back(preset_aoi_sweep(cfg));
    else if (id == "ctra-convergence")
      result.tables.push_back(preset_ctra_convergence(cfg, ctx));
    else if (id == "capacity-report")
      result.tables.push_back(preset_capacity_report(cfg, ctx));
    else if (id == "algorithm-comparison")
      result.tables.push_back(preset_algorithm_comparison(cfg, ctx));
    else if (id == "subframe-sweep")
      result.tables.push_back(preset_subframe_sweep(cfg, ctx));
    else if (id == "rcs-cases")
      result.tables.push_back(preset_rcs_cases(cfg, ctx));
    else if (id == "strategy-trace")
      result.tables.push_back(preset_strategy_trace(cfg, ctx));
    else if (id == "custom")
      result.tables.push_back(preset_custom(cfg, ctx));
    else
      throw ConfigError("config error: unknown experiment id '" + id + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error("experiment '" + id + "' failed: " + e.what());
  }
  result.any_infeasible = ctx.any_infeasible;
  return result;
}

void emit(const ResultTable& table, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) os << ',';
      os << table.columns[c].name;
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ',';
        os << cell_to_string(row[c]);
      }
      os << '\n';
    }
    return;
  }
  for (const auto& row : table.rows) {
    os << '{';
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << '"' << table.columns[c].name << "\":";
      if (std::holds_alternative<std::string>(row[c]))
        os << '"' << std::get<std::string>(row[c]) << '"';
      else
        os << cell_to_string(row[c]);
    }
    os << "}\n";
  }
}

std::string emit_path(const ResultTable& table, OutputFormat format,
                      const std::string& out_dir) {
  const std::string ext = format == OutputFormat::Csv ? ".csv" : ".jsonl";
  const std::string path = out_dir + "/" + table.name + ext;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  emit(table, format, out);
  if (!out) throw std::runtime_error("write failure: " + path);
  return path;
}

}  // namespace jscis
