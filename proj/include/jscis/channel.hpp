#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jscis/model.hpp"

// Scenario geometry and propagation gains: two-path radar gains, free-space
// communication links with log-normal shadowing, and the RCS configurations.

namespace jscis {

enum class RcsCase { AllOne, CrossHalf, CrossTwo, CrossRandom };

struct ScenarioSpec {
  int num_vehicles = 10;
  double road_length = 200.0;      // m, vehicles placed uniformly along it
  double lane_separation = 4.0;    // m between the two lanes
  double target_lead = 50.0;       // m ahead of the convoy centroid
  double max_distance = 200.0;     // m, link-budget bound
  double tx_power = 10.0;          // W, same for every vehicle
  double shadow_sigma_db = 8.0;    // dB, log-normal shadowing per link
  std::vector<int> comm_partner;   // empty = star toward vehicle 0
};

struct Scenario {
  int num_vehicles = 0;
  std::vector<std::array<double, 2>> positions;        // m
  std::vector<double> tx_power;                        // W
  std::vector<double> target_distance;                 // R_i, m
  std::vector<std::vector<double>> rcs;                // sigma_{i,j}, m^2
  std::vector<std::vector<double>> comm_gain;          // g^{ch}_{i,k}, linear
  std::vector<std::vector<double>> pair_distance;      // d_{i,k}, m
  std::vector<int> partner;
  std::uint64_t seed = 0;
};

// G_t*G_r*sigma*lambda^2 / ((4*pi)^3 * R^4)
double radar_self_gain(const SystemParams& params, double sigma_ii, double r_i);

// G_t*G_r*sigma*lambda^2 / ((4*pi)^3 * R_i^2 * R_j^2)
double radar_cross_gain(const SystemParams& params, double sigma_ij, double r_i,
                        double r_j);

// Friis free-space gain (lambda/(4*pi*d))^2 scaled by the shadowing term.
double comm_link_gain(const SystemParams& params, double d, double shadow_db);

// One-way free-space gain including both antenna gains:
// G_t*G_r*lambda^2 / ((4*pi)^2 * d^2)
double radar_to_comm_gain(const SystemParams& params, double d);

Scenario build_scenario(const ScenarioSpec& spec, const SystemParams& params,
                        RcsCase rcs_case, std::uint64_t seed);

}  // namespace jscis
