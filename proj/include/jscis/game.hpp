#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jscis/aoi.hpp"
#include "jscis/metrics.hpp"

// The non-cooperative allocation game: potential-function utility, the CTRA
// best-response solver, NE verification, an exhaustive-search oracle, and the
// uniform/random/annealing baselines.

namespace jscis {

struct GameConfig {
  double penalty_eta = 1e10;  // bits per frame
  std::vector<std::vector<int>> strategy_sets;  // numerators per vehicle
  int ns = 10;
  CapacityMode capacity_mode = CapacityMode::Literal;
  bool apply_c3_filter = false;
  int max_iterations = 1000;
};

// Full Omega_t strategy set for every vehicle; eta = eta_tilde * T.
GameConfig default_game_config(const SystemParams& params, int num_vehicles);

// Intersects every strategy set with the AoI-feasible ratios. Throws if a
// vehicle ends up with an empty set.
void apply_c3_filter(GameConfig& cfg, const AoiParams& aoi);

// U = I^rad_total - eta * (number of vehicles violating C2).
double utility(const Scenario& sc, const SystemParams& params,
               const GameConfig& cfg, const AllocationProfile& profile);

struct TrajectoryPoint {
  int iteration = 0;   // sweep number
  int vehicle = 0;     // whose strategy changed
  AllocationProfile profile;
  double utility = 0.0;
};

struct GameRun {
  std::vector<TrajectoryPoint> trajectory;  // accepted updates only
  AllocationProfile final_profile;
  double final_utility = 0.0;
  double final_radar_mi = 0.0;
  int iterations = 0;  // full sweeps until no change
  bool converged = false;
  bool feasible = false;  // every vehicle satisfies C2 at the final profile
  std::vector<bool> ne_certificate;
};

struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(GameRun run)
      : std::runtime_error("CTRA exceeded max_iterations without converging"),
        partial(std::move(run)) {}
  GameRun partial;
};

GameRun ctra_solve(const Scenario& sc, const SystemParams& params,
                   const GameConfig& cfg);

// Per vehicle: true iff no alternative strategy strictly increases U.
std::vector<bool> verify_ne(const Scenario& sc, const SystemParams& params,
                            const GameConfig& cfg,
                            const AllocationProfile& profile);

struct ExhaustiveResult {
  AllocationProfile best_profile;
  double best_utility = 0.0;
  std::vector<AllocationProfile> nash_profiles;
  std::vector<double> nash_utilities;
};

ExhaustiveResult exhaustive_oracle(const Scenario& sc,
                                   const SystemParams& params,
                                   const GameConfig& cfg,
                                   std::uint64_t budget = 1000000);

struct BaselineResult {
  AllocationProfile profile;
  double utility = 0.0;
  double radar_mi = 0.0;
  bool positive = false;  // best utility found was > 0
};

BaselineResult baseline_uniform(const Scenario& sc, const SystemParams& params,
                                const GameConfig& cfg);

BaselineResult baseline_random(const Scenario& sc, const SystemParams& params,
                               const GameConfig& cfg, int samples,
                               std::uint64_t seed);

struct AnnealingSchedule {
  double initial_temp_fraction = 0.1;  // of eta
  double cooling = 0.95;
  int proposals_per_temperature = 100;
  double floor_fraction = 1e-6;  // of eta
};

BaselineResult baseline_annealing(const Scenario& sc, const SystemParams& params,
                                  const GameConfig& cfg,
                                  const AnnealingSchedule& schedule,
                                  std::uint64_t seed);

}  // namespace jscis
