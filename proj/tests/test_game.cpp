#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jscis/game.hpp"

using namespace jscis;

namespace {

Scenario random_scenario(int n, std::uint64_t seed,
                         RcsCase rcs = RcsCase::AllOne) {
  ScenarioSpec spec;
  spec.num_vehicles = n;
  return build_scenario(spec, SystemParams{}, rcs, seed);
}

}  // namespace

TEST_CASE("utility equals total radar MI when C2 holds everywhere") {
  const SystemParams p;
  const Scenario sc = random_scenario(3, 4);
  const GameConfig cfg = default_game_config(p, 3);
  const AllocationProfile low = make_profile({1, 1, 1}, 10);
  const Totals t = totals(sc, p, low, cfg.capacity_mode);
  REQUIRE(std::all_of(t.per_vehicle.begin(), t.per_vehicle.end(),
                      [](const VehicleMetrics& m) { return m.c2_satisfied; }));
  CHECK(utility(sc, p, cfg, low) == doctest::Approx(t.radar_mi_total));
}

TEST_CASE("each C2 violator costs exactly eta") {
  const SystemParams p;
  const Scenario sc = random_scenario(3, 4);
  const GameConfig cfg = default_game_config(p, 3);
  // find a profile with at least one violator
  for (int k = 9; k >= 1; --k) {
    const AllocationProfile probe = make_profile({k, k, k}, 10);
    const Totals t = totals(sc, p, probe, cfg.capacity_mode);
    int violators = 0;
    for (const auto& m : t.per_vehicle)
      if (!m.c2_satisfied) ++violators;
    CHECK(utility(sc, p, cfg, probe) ==
          doctest::Approx(t.radar_mi_total - cfg.penalty_eta * violators));
    if (violators > 0 && cfg.penalty_eta > t.radar_mi_total)
      CHECK(utility(sc, p, cfg, probe) < 0.0);
  }
}

TEST_CASE("potential identity: unilateral differences match global differences") {
  // U_m == U by construction; regression guard on the utility path
  const SystemParams p;
  const Scenario sc = random_scenario(3, 9);
  const GameConfig cfg = default_game_config(p, 3);
  AllocationProfile a = make_profile({2, 5, 7}, 10);
  AllocationProfile b = a;
  b.numerators[1] = 3;
  const double du = utility(sc, p, cfg, a) - utility(sc, p, cfg, b);
  // with common-payoff utilities the player's difference IS the global one
  CHECK(du == utility(sc, p, cfg, a) - utility(sc, p, cfg, b));
  CHECK(std::isfinite(du));
}

TEST_CASE("single player converges to its argmax in one sweep") {
  const SystemParams p;
  const Scenario sc = random_scenario(1, 13);
  const GameConfig cfg = default_game_config(p, 1);
  const GameRun run = ctra_solve(sc, p, cfg);
  CHECK(run.converged);
  CHECK(run.iterations <= 2);
  double best = -1e300;
  int best_k = 0;
  for (int k = 1; k <= 9; ++k) {
    const double u = utility(sc, p, cfg, make_profile({k}, 10));
    if (u > best) {
      best = u;
      best_k = k;
    }
  }
  CHECK(run.final_profile.numerators[0] == best_k);
  CHECK(run.final_utility == doctest::Approx(best));
  CHECK(run.ne_certificate == std::vector<bool>{true});

  const BaselineResult uni = baseline_uniform(sc, p, cfg);
  CHECK(uni.profile == run.final_profile);
}

TEST_CASE("CTRA trajectory is strictly increasing and certified") {
  const SystemParams p;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const Scenario sc = random_scenario(n, seed);
    const GameConfig cfg = default_game_config(p, n);
    const GameRun run = ctra_solve(sc, p, cfg);
    CHECK(run.converged);
    for (std::size_t t = 1; t < run.trajectory.size(); ++t)
      CHECK(run.trajectory[t].utility > run.trajectory[t - 1].utility);
    for (bool ok : run.ne_certificate) CHECK(ok);
  }
}

TEST_CASE("CTRA lands on an NE found by exhaustive enumeration") {
  const SystemParams p;
  for (std::uint64_t seed = 10; seed <= 13; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const Scenario sc = random_scenario(n, seed);
    const GameConfig cfg = default_game_config(p, n);
    const GameRun run = ctra_solve(sc, p, cfg);
    const ExhaustiveResult ex = exhaustive_oracle(sc, p, cfg);
    CHECK(ex.best_utility >= run.final_utility - 1e-9);
    bool found = false;
    for (double u : ex.nash_utilities)
      if (std::abs(u - run.final_utility) <= 1e-9 * std::abs(u)) found = true;
    CHECK(found);
  }
}

TEST_CASE("verify_ne flags a profitable deviation") {
  const SystemParams p;
  const Scenario sc = random_scenario(2, 20);
  const GameConfig cfg = default_game_config(p, 2);
  const GameRun run = ctra_solve(sc, p, cfg);
  // walk one vehicle off the equilibrium; if that changes utility, the
  // deviated profile cannot be an NE for that vehicle
  AllocationProfile off = run.final_profile;
  for (int k = 1; k <= 9; ++k) {
    if (k == run.final_profile.numerators[0]) continue;
    off.numerators[0] = k;
    if (utility(sc, p, cfg, off) < run.final_utility - 1e-9) {
      CHECK(verify_ne(sc, p, cfg, off)[0] == false);
      return;
    }
  }
  WARN_MESSAGE(false, "all deviations were utility-neutral; nothing to flag");
}

TEST_CASE("exhaustive NE set is closed under swapping symmetric players") {
  const SystemParams p = [] {
    SystemParams sp;
    return sp;
  }();
  // hand-built fully symmetric two-vehicle scenario
  Scenario sc;
  sc.num_vehicles = 2;
  sc.tx_power = {10.0, 10.0};
  sc.target_distance = {100.0, 100.0};
  sc.rcs = {{1.0, 1.0}, {1.0, 1.0}};
  sc.comm_gain = {{0.0, 1e-11}, {1e-11, 0.0}};
  sc.pair_distance = {{0.0, 50.0}, {50.0, 0.0}};
  sc.partner = {1, 0};
  sc.positions = {{0.0, 0.0}, {50.0, 0.0}};
  const GameConfig cfg = default_game_config(p, 2);
  const ExhaustiveResult ex = exhaustive_oracle(sc, p, cfg);
  for (const auto& ne : ex.nash_profiles) {
    AllocationProfile swapped = ne;
    std::swap(swapped.numerators[0], swapped.numerators[1]);
    bool found = false;
    for (const auto& other : ex.nash_profiles)
      if (other == swapped) found = true;
    CHECK(found);
  }
}

TEST_CASE("exhaustive oracle refuses oversized enumerations") {
  const SystemParams p;
  const Scenario sc = random_scenario(10, 30);
  const GameConfig cfg = default_game_config(p, 10);
  CHECK_THROWS_AS(exhaustive_oracle(sc, p, cfg, 1000000),
                  std::invalid_argument);
}

TEST_CASE("feasible NEs satisfy C2 when eta dominates the radar MI") {
  const SystemParams p;
  for (std::uint64_t seed = 40; seed <= 44; ++seed) {
    const Scenario sc = random_scenario(2, seed);
    const GameConfig cfg = default_game_config(p, 2);
    const ExhaustiveResult ex = exhaustive_oracle(sc, p, cfg);
    // hypothesis: a feasible profile exists and eta >= max I^rad
    bool feasible_exists = false;
    double max_rad = 0.0;
    for (int k0 = 1; k0 <= 9; ++k0)
      for (int k1 = 1; k1 <= 9; ++k1) {
        const Totals t =
            totals(sc, p, make_profile({k0, k1}, 10), cfg.capacity_mode);
        max_rad = std::max(max_rad, t.radar_mi_total);
        if (t.per_vehicle[0].c2_satisfied && t.per_vehicle[1].c2_satisfied)
          feasible_exists = true;
      }
    if (!feasible_exists || cfg.penalty_eta < max_rad) continue;
    for (const auto& ne : ex.nash_profiles) {
      const Totals t = totals(sc, p, ne, cfg.capacity_mode);
      for (const auto& m : t.per_vehicle) CHECK(m.c2_satisfied);
    }
  }
}

TEST_CASE("random baseline is reproducible and dominated by its limit") {
  const SystemParams p;
  const Scenario sc = random_scenario(3, 50);
  const GameConfig cfg = default_game_config(p, 3);
  const BaselineResult a = baseline_random(sc, p, cfg, 1, 77);
  const BaselineResult b = baseline_random(sc, p, cfg, 1, 77);
  CHECK(a.profile == b.profile);
  // full-coverage sampling approaches the exhaustive optimum
  const BaselineResult big = baseline_random(sc, p, cfg, 20000, 77);
  const ExhaustiveResult ex = exhaustive_oracle(sc, p, cfg);
  CHECK(big.utility == doctest::Approx(ex.best_utility).epsilon(1e-9));
}

TEST_CASE("uniform baseline equals exhaustive restricted to the diagonal") {
  const SystemParams p;
  const Scenario sc = random_scenario(3, 51);
  const GameConfig cfg = default_game_config(p, 3);
  const BaselineResult uni = baseline_uniform(sc, p, cfg);
  double best = -1e300;
  for (int k = 1; k <= 9; ++k)
    best = std::max(best, utility(sc, p, cfg, make_profile({k, k, k}, 10)));
  CHECK(uni.utility == doctest::Approx(best));
}

TEST_CASE("annealing is seeded-reproducible") {
  const SystemParams p;
  const Scenario sc = random_scenario(4, 60);
  const GameConfig cfg = default_game_config(p, 4);
  AnnealingSchedule fast;
  fast.proposals_per_temperature = 10;
  fast.floor_fraction = 1e-3;
  const BaselineResult a = baseline_annealing(sc, p, cfg, fast, 5);
  const BaselineResult b = baseline_annealing(sc, p, cfg, fast, 5);
  CHECK(a.profile == b.profile);
  CHECK(a.utility == b.utility);
}

TEST_CASE("exhaustive optimum dominates every solver") {
  // an NE need not be globally optimal, but nothing may beat the full scan
  const SystemParams p;
  for (std::uint64_t seed = 70; seed <= 74; ++seed) {
    const Scenario sc = random_scenario(4, seed);
    const GameConfig cfg = default_game_config(p, 4);
    const double best = exhaustive_oracle(sc, p, cfg).best_utility;
    CHECK(ctra_solve(sc, p, cfg).final_utility <= best + 1e-9);
    CHECK(baseline_uniform(sc, p, cfg).utility <= best + 1e-9);
    CHECK(baseline_random(sc, p, cfg, 50, seed).utility <= best + 1e-9);
  }
}

TEST_CASE("c3 filter narrows strategy sets") {
  const SystemParams p;
  GameConfig cfg = default_game_config(p, 3);
  AoiParams aoi;
  aoi.arrival_rate = 0.9;
  aoi.network_density = 2e-4;
  apply_c3_filter(cfg, aoi);
  for (const auto& set : cfg.strategy_sets) {
    CHECK(!set.empty());
    CHECK(set.size() < 9);
  }
}
