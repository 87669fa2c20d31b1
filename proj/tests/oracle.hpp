#pragma once

// Test-only first-principles oracle. Rebuilds per-vehicle radar MI and comm
// capacity from the raw ratios: boundaries are collected and deduplicated,
// interferer membership is decided by comparing each vehicle's ratio against
// the segment midpoint, and all propagation gains are written out directly.
// No code is shared with the library's segment/rank machinery.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "jscis/channel.hpp"
#include "jscis/model.hpp"

namespace oracle {

struct Result {
  std::vector<double> radar_mi;
  std::vector<double> comm_rate;
  std::vector<double> comm_capacity_literal;
  std::vector<double> comm_capacity_consistent;
  double radar_mi_total = 0.0;
};

inline Result totals(const jscis::Scenario& sc, const jscis::SystemParams& p,
                     const std::vector<double>& ratios) {
  const int n = sc.num_vehicles;
  const double lambda = jscis::kSpeedOfLight / p.carrier_frequency;
  const double four_pi = 4.0 * M_PI;
  const double noise = p.noise_psd * p.bandwidth;

  std::vector<double> bounds = ratios;
  bounds.push_back(0.0);
  bounds.push_back(1.0);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  Result out;
  out.radar_mi.assign(n, 0.0);
  out.comm_rate.assign(n, 0.0);
  out.comm_capacity_literal.assign(n, 0.0);
  out.comm_capacity_consistent.assign(n, 0.0);

  for (int i = 0; i < n; ++i) {
    const double a_i = ratios[i];
    const double self_gain = p.tx_gain * p.rx_gain * sc.rcs[i][i] * lambda *
                             lambda /
                             (std::pow(four_pi, 3) *
                              std::pow(sc.target_distance[i], 4));
    double radar_sum = 0.0;
    double comm_sum = 0.0;
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
      const double lo = bounds[b], hi = bounds[b + 1];
      const double width = hi - lo;
      const double mid = (lo + hi) / 2.0;
      if (hi <= a_i) {
        // vehicle i still detecting in this slice
        double interference = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          if (ratios[j] > mid) {
            interference += sc.tx_power[j] * p.tx_gain * p.rx_gain *
                            sc.rcs[i][j] * lambda * lambda /
                            (std::pow(four_pi, 3) *
                             sc.target_distance[i] * sc.target_distance[i] *
                             sc.target_distance[j] * sc.target_distance[j]);
          } else {
            interference += sc.tx_power[j] * p.tx_gain * sc.comm_gain[i][j] *
                            p.rx_gain;
          }
        }
        const double sinr =
            sc.tx_power[i] * self_gain / (interference + noise);
        radar_sum += width * std::log2(1.0 + sinr);
      } else {
        // vehicle i transmitting in this slice
        double interference = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == sc.partner[i]) continue;
          if (ratios[k] > mid) {
            interference += sc.tx_power[k] * p.tx_gain * p.rx_gain * lambda *
                            lambda /
                            (four_pi * four_pi * sc.pair_distance[i][k] *
                             sc.pair_distance[i][k]);
          } else {
            interference += sc.tx_power[k] * p.tx_gain * sc.comm_gain[i][k] *
                            p.rx_gain;
          }
        }
        const double signal = sc.tx_power[i] * p.tx_gain *
                              sc.comm_gain[i][sc.partner[i]] * p.rx_gain;
        const double sinr = signal / (interference + noise);
        comm_sum += width * std::log2(1.0 + sinr);
      }
    }
    out.radar_mi[i] = p.frame_duration * p.bandwidth * radar_sum;
    out.comm_rate[i] = p.bandwidth * comm_sum;
    out.comm_capacity_consistent[i] = p.frame_duration * out.comm_rate[i];
    out.comm_capacity_literal[i] =
        (1.0 - a_i) * out.comm_capacity_consistent[i];
    out.radar_mi_total += out.radar_mi[i];
  }
  return out;
}

}  // namespace oracle
