#include "jscis/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jscis/rng.hpp"

namespace jscis {

namespace {

void check_config(const Scenario& sc, const GameConfig& cfg) {
  if (static_cast<int>(cfg.strategy_sets.size()) != sc.num_vehicles)
    throw std::invalid_argument("strategy_sets size does not match scenario");
  for (const auto& set : cfg.strategy_sets)
    if (set.empty())
      throw std::invalid_argument("every strategy set must be non-empty");
  if (cfg.penalty_eta <= 0)
    throw std::invalid_argument("penalty_eta must be positive");
}

bool all_feasible(const Totals& t) {
  return std::all_of(t.per_vehicle.begin(), t.per_vehicle.end(),
                     [](const VehicleMetrics& m) { return m.c2_satisfied; });
}

}  // namespace

GameConfig default_game_config(const SystemParams& params, int num_vehicles) {
  GameConfig cfg;
  cfg.ns = params.num_subframes;
  cfg.penalty_eta = 1e10 * params.frame_duration;  // eta_tilde = 10 Gbps
  std::vector<int> full(params.num_subframes - 1);
  std::iota(full.begin(), full.end(), 1);
  cfg.strategy_sets.assign(num_vehicles, full);
  return cfg;
}

void apply_c3_filter(GameConfig& cfg, const AoiParams& aoi) {
  const std::vector<int> feasible = feasible_ratio_set(aoi, cfg.ns);
  for (std::size_t m = 0; m < cfg.strategy_sets.size(); ++m) {
    std::vector<int> kept;
    for (int k : cfg.strategy_sets[m])
      if (std::find(feasible.begin(), feasible.end(), k) != feasible.end())
        kept.push_back(k);
    if (kept.empty())
      throw std::invalid_argument("C3 filter left vehicle " + std::to_string(m) +
                                  " with an empty strategy set");
    cfg.strategy_sets[m] = kept;
  }
}

double utility(const Scenario& sc, const SystemParams& params,
               const GameConfig& cfg, const AllocationProfile& profile) {
  const Totals t = totals(sc, params, profile, cfg.capacity_mode);
  int violations = 0;
  for (const VehicleMetrics& m : t.per_vehicle)
    if (!m.c2_satisfied) ++violations;
  return t.radar_mi_total - cfg.penalty_eta * violations;
}

GameRun ctra_solve(const Scenario& sc, const SystemParams& params,
                   const GameConfig& cfg) {
  check_config(sc, cfg);
  const int n = sc.num_vehicles;

  // Start from each vehicle's minimum available ratio.
  std::vector<int> current(n);
  for (int m = 0; m < n; ++m)
    current[m] = *std::min_element(cfg.strategy_sets[m].begin(),
                                   cfg.strategy_sets[m].end());
  AllocationProfile profile = make_profile(current, cfg.ns);
  double best_u = utility(sc, params, cfg, profile);

  GameRun run;
  run.trajectory.push_back({0, -1, profile, best_u});

  for (int sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
    bool changed = false;
    for (int m = 0; m < n; ++m) {
      const int incumbent = profile.numerators[m];
      int best_k = incumbent;
      double best_candidate_u = best_u;
      for (int k : cfg.strategy_sets[m]) {
        if (k == incumbent) continue;
        profile.numerators[m] = k;
        const double u = utility(sc, params, cfg, profile);
        // Strict improvement only; ties keep the incumbent.
        if (u > best_candidate_u) {
          best_candidate_u = u;
          best_k = k;
        }
      }
      profile.numerators[m] = best_k;
      if (best_k != incumbent) {
        best_u = best_candidate_u;
        changed = true;
        run.trajectory.push_back({sweep, m, profile, best_u});
      }
    }
    run.iterations = sweep;
    if (!changed) {
      run.converged = true;
      break;
    }
  }

  run.final_profile = profile;
  run.final_utility = best_u;
  const Totals t = totals(sc, params, profile, cfg.capacity_mode);
  run.final_radar_mi = t.radar_mi_total;
  run.feasible = all_feasible(t);
  if (!run.converged) throw ConvergenceError(std::move(run));
  run.ne_certificate = verify_ne(sc, params, cfg, profile);
  return run;
}

std::vector<bool> verify_ne(const Scenario& sc, const SystemParams& params,
                            const GameConfig& cfg,
                            const AllocationProfile& profile) {
  check_config(sc, cfg);
  AllocationProfile probe = profile;
  const double base_u = utility(sc, params, cfg, profile);
  std::vector<bool> certificate(sc.num_vehicles, true);
  for (int m = 0; m < sc.num_vehicles; ++m) {
    for (int k : cfg.strategy_sets[m]) {
      if (k == profile.numerators[m]) continue;
      probe.numerators[m] = k;
      if (utility(sc, params, cfg, probe) > base_u) {
        certificate[m] = false;
        break;
      }
    }
    probe.numerators[m] = profile.numerators[m];
  }
  return certificate;
}

ExhaustiveResult exhaustive_oracle(const Scenario& sc, const SystemParams& params,
                                   const GameConfig& cfg, std::uint64_t budget) {
  check_config(sc, cfg);
  const int n = sc.num_vehicles;
  std::uint64_t count = 1;
  for (const auto& set : cfg.strategy_sets) {
    count *= set.size();
    if (count > budget)
      throw std::invalid_argument(
          "enumeration would exceed the budget: > " + std::to_string(budget) +
          " profiles");
  }

  std::vector<double> utilities(count);
  std::vector<int> idx(n, 0);
  AllocationProfile profile = make_profile(
      [&] {
        std::vector<int> first(n);
        for (int m = 0; m < n; ++m) first[m] = cfg.strategy_sets[m][0];
        return first;
      }(),
      cfg.ns);

  // Mixed-radix enumeration; flat index advances with vehicle 0 fastest.
  for (std::uint64_t flat = 0; flat < count; ++flat) {
    for (int m = 0; m < n; ++m)
      profile.numerators[m] = cfg.strategy_sets[m][idx[m]];
    utilities[flat] = utility(sc, params, cfg, profile);
    for (int m = 0; m < n; ++m) {
      if (++idx[m] < static_cast<int>(cfg.strategy_sets[m].size())) break;
      idx[m] = 0;
    }
  }

  auto flat_of = [&](const std::vector<int>& digits) {
    std::uint64_t flat = 0, stride = 1;
    for (int m = 0; m < n; ++m) {
      flat += stride * digits[m];
      stride *= cfg.strategy_sets[m].size();
    }
    return flat;
  };

  ExhaustiveResult result;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> digits(n, 0);
  for (std::uint64_t flat = 0; flat < count; ++flat) {
    for (int m = 0; m < n; ++m)
      profile.numerators[m] = cfg.strategy_sets[m][digits[m]];
    const double u = utilities[flat];
    if (u > best) {
      best = u;
      result.best_profile = profile;
    }
    bool is_ne = true;
    for (int m = 0; m < n && is_ne; ++m) {
      const int saved = digits[m];
      for (int alt = 0; alt < static_cast<int>(cfg.strategy_sets[m].size());
           ++alt) {
        if (alt == saved) continue;
        digits[m] = alt;
        if (utilities[flat_of(digits)] > u) {
          is_ne = false;
          break;
        }
      }
      digits[m] = saved;
    }
    if (is_ne) {
      result.nash_profiles.push_back(profile);
      result.nash_utilities.push_back(u);
    }
    for (int m = 0; m < n; ++m) {
      if (++digits[m] < static_cast<int>(cfg.strategy_sets[m].size())) break;
      digits[m] = 0;
    }
  }
  result.best_utility = best;
  return result;
}

BaselineResult baseline_uniform(const Scenario& sc, const SystemParams& params,
                                const GameConfig& cfg) {
  check_config(sc, cfg);
  // Common ratios available to every vehicle.
  std::vector<int> common = cfg.strategy_sets[0];
  for (const auto& set : cfg.strategy_sets) {
    std::vector<int> kept;
    for (int k : common)
      if (std::find(set.begin(), set.end(), k) != set.end()) kept.push_back(k);
    common = kept;
  }
  if (common.empty())
    throw std::invalid_argument("no common ratio available to all vehicles");

  BaselineResult result;
  double best = -std::numeric_limits<double>::infinity();
  for (int k : common) {
    const AllocationProfile profile =
        make_profile(std::vector<int>(sc.num_vehicles, k), cfg.ns);
    const double u = utility(sc, params, cfg, profile);
    if (u > best) {
      best = u;
      result.profile = profile;
    }
  }
  result.utility = best;
  result.positive = best > 0;
  result.radar_mi =
      totals(sc, params, result.profile, cfg.capacity_mode).radar_mi_total;
  return result;
}

BaselineResult baseline_random(const Scenario& sc, const SystemParams& params,
                               const GameConfig& cfg, int samples,
                               std::uint64_t seed) {
  check_config(sc, cfg);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  BaselineResult result;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> draw(sc.num_vehicles);
  for (int s = 0; s < samples; ++s) {
    for (int m = 0; m < sc.num_vehicles; ++m) {
      const auto& set = cfg.strategy_sets[m];
      draw[m] = set[rng.uniform_int(static_cast<int>(set.size()))];
    }
    const AllocationProfile profile = make_profile(draw, cfg.ns);
    const double u = utility(sc, params, cfg, profile);
    if (u > best) {
      best = u;
      result.profile = profile;
    }
  }
  result.utility = best;
  result.positive = best > 0;
  result.radar_mi =
      totals(sc, params, result.profile, cfg.capacity_mode).radar_mi_total;
  return result;
}

BaselineResult baseline_annealing(const Scenario& sc, const SystemParams& params,
                                  const GameConfig& cfg,
                                  const AnnealingSchedule& schedule,
                                  std::uint64_t seed) {
  check_config(sc, cfg);
  if (schedule.cooling <= 0 || schedule.cooling >= 1)
    throw std::invalid_argument("cooling factor must be in (0, 1)");
  if (schedule.proposals_per_temperature < 1)
    throw std::invalid_argument("proposals_per_temperature must be >= 1");

  Rng rng(seed);
  const int n = sc.num_vehicles;

  // Random feasible-grid start.
  std::vector<int> state(n);
  for (int m = 0; m < n; ++m) {
    const auto& set = cfg.strategy_sets[m];
    state[m] = set[rng.uniform_int(static_cast<int>(set.size()))];
  }
  AllocationProfile profile = make_profile(state, cfg.ns);
  double current_u = utility(sc, params, cfg, profile);

  BaselineResult result;
  result.profile = profile;
  double best = current_u;

  double temp = schedule.initial_temp_fraction * cfg.penalty_eta;
  const double floor = schedule.floor_fraction * cfg.penalty_eta;
  while (temp > floor) {
    for (int p = 0; p < schedule.proposals_per_temperature; ++p) {
      const int m = rng.uniform_int(n);
      const auto& set = cfg.strategy_sets[m];
      const int step = rng.uniform_int(2) == 0 ? -1 : 1;
      const int proposed = profile.numerators[m] + step;
      if (std::find(set.begin(), set.end(), proposed) == set.end()) continue;
      const int saved = profile.numerators[m];
      profile.numerators[m] = proposed;
      const double u = utility(sc, params, cfg, profile);
      const double delta = u - current_u;
      if (delta >= 0 || (temp > 0 && rng.uniform() < std::exp(delta / temp))) {
        current_u = u;
        if (u > best) {
          best = u;
          result.profile = profile;
        }
      } else {
        profile.numerators[m] = saved;
      }
    }
    temp *= schedule.cooling;
  }

  result.utility = best;
  result.positive = best > 0;
  result.radar_mi =
      totals(sc, params, result.profile, cfg.capacity_mode).radar_mi_total;
  return result;
}

}  // namespace jscis
