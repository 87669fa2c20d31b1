#include "jscis/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jscis/rng.hpp"

namespace jscis {

namespace {
constexpr double kFourPi = 4.0 * M_PI;
}

double radar_self_gain(const SystemParams& params, double sigma_ii, double r_i) {
  if (r_i <= 0) throw std::domain_error("target distance R_i must be positive");
  if (sigma_ii < 0) throw std::domain_error("RCS must be non-negative");
  const double lambda = params.wavelength();
  return params.tx_gain * params.rx_gain * sigma_ii * lambda * lambda /
         (kFourPi * kFourPi * kFourPi * r_i * r_i * r_i * r_i);
}

double radar_cross_gain(const SystemParams& params, double sigma_ij, double r_i,
                        double r_j) {
  if (r_i <= 0 || r_j <= 0)
    throw std::domain_error("target distances must be positive");
  if (sigma_ij < 0) throw std::domain_error("RCS must be non-negative");
  const double lambda = params.wavelength();
  return params.tx_gain * params.rx_gain * sigma_ij * lambda * lambda /
         (kFourPi * kFourPi * kFourPi * r_i * r_i * r_j * r_j);
}

double comm_link_gain(const SystemParams& params, double d, double shadow_db) {
  if (d <= 0) throw std::domain_error("link distance must be positive");
  const double lambda = params.wavelength();
  const double friis = (lambda / (kFourPi * d)) * (lambda / (kFourPi * d));
  return friis * std::pow(10.0, shadow_db / 10.0);
}

double radar_to_comm_gain(const SystemParams& params, double d) {
  if (d <= 0) throw std::domain_error("distance must be positive");
  const double lambda = params.wavelength();
  return params.tx_gain * params.rx_gain * lambda * lambda /
         (kFourPi * kFourPi * d * d);
}

Scenario build_scenario(const ScenarioSpec& spec, const SystemParams& params,
                        RcsCase rcs_case, std::uint64_t seed) {
  if (spec.num_vehicles < 1)
    throw std::invalid_argument("scenario needs at least one vehicle");
  if (spec.road_length <= 0 || spec.lane_separation < 0)
    throw std::invalid_argument("scenario geometry must be positive");
  if (spec.tx_power <= 0)
    throw std::invalid_argument("tx_power must be positive");
  if (!spec.comm_partner.empty() &&
      static_cast<int>(spec.comm_partner.size()) != spec.num_vehicles)
    throw std::invalid_argument("comm_partner length must equal num_vehicles");

  const int n = spec.num_vehicles;
  Rng rng(seed);

  Scenario sc;
  sc.num_vehicles = n;
  sc.seed = seed;
  sc.tx_power.assign(n, spec.tx_power);

  // Placement: uniform along the road, random lane.
  sc.positions.resize(n);
  double centroid_x = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, spec.road_length);
    const double y = rng.uniform_int(2) == 0 ? 0.0 : spec.lane_separation;
    sc.positions[i] = {x, y};
    centroid_x += x;
  }
  centroid_x /= n;

  // Shared radar target ahead of the convoy centroid.
  const std::array<double, 2> target = {centroid_x + spec.target_lead,
                                        spec.lane_separation / 2.0};
  sc.target_distance.resize(n);
  for (int i = 0; i < n; ++i) {
    const double dx = sc.positions[i][0] - target[0];
    const double dy = sc.positions[i][1] - target[1];
    const double r = std::hypot(dx, dy);
    if (r <= 0 || r > spec.max_distance)
      throw std::invalid_argument("target distance for vehicle " +
                                  std::to_string(i) +
                                  " violates (0, max_distance]");
    sc.target_distance[i] = r;
  }

  sc.pair_distance.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      const double dx = sc.positions[i][0] - sc.positions[k][0];
      const double dy = sc.positions[i][1] - sc.positions[k][1];
      sc.pair_distance[i][k] = std::hypot(dx, dy);
    }

  // Block shadowing: one draw per ordered link, fixed for the scenario.
  sc.comm_gain.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      const double shadow_db = spec.shadow_sigma_db * rng.normal();
      sc.comm_gain[i][k] =
          std::min(1.0, comm_link_gain(params, sc.pair_distance[i][k], shadow_db));
    }

  sc.rcs.assign(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (rcs_case) {
        case RcsCase::AllOne: sc.rcs[i][j] = 1.0; break;
        case RcsCase::CrossHalf: sc.rcs[i][j] = 0.5; break;
        case RcsCase::CrossTwo: sc.rcs[i][j] = 2.0; break;
        case RcsCase::CrossRandom: sc.rcs[i][j] = rng.uniform(0.5, 2.0); break;
      }
    }

  if (!spec.comm_partner.empty()) {
    sc.partner = spec.comm_partner;
    for (int i = 0; i < n; ++i)
      if (sc.partner[i] < 0 || sc.partner[i] >= n || (n > 1 && sc.partner[i] == i))
        throw std::invalid_argument("comm_partner[" + std::to_string(i) +
                                    "] invalid");
  } else if (n == 1) {
    // Single vehicle: the comm link goes to an external roadside receiver at
    // the target range.
    sc.partner.assign(1, 0);
    const double shadow_db = spec.shadow_sigma_db * rng.normal();
    sc.comm_gain[0][0] =
        std::min(1.0, comm_link_gain(params, sc.target_distance[0], shadow_db));
  } else {
    // Star toward the central vehicle 0; vehicle 0 talks to vehicle 1.
    sc.partner.assign(n, 0);
    sc.partner[0] = 1;
  }

  return sc;
}

}  // namespace jscis
