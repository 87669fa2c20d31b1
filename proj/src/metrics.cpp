#include "jscis/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jscis {

namespace {

void check_vehicle(const Scenario& sc, int vehicle) {
  if (vehicle < 0 || vehicle >= sc.num_vehicles)
    throw std::domain_error("vehicle index out of range");
}

double log2_1p(double x) { return std::log1p(x) / M_LN2; }

}  // namespace

Interference radar_segment_interference(const Scenario& sc,
                                        const SystemParams& params,
                                        const OrderedAllocation& ordered,
                                        int vehicle, int segment) {
  check_vehicle(sc, vehicle);
  if (segment < 1 || segment > ordered.rank[vehicle])
    throw std::domain_error("segment " + std::to_string(segment) +
                            " outside radar span of vehicle " +
                            std::to_string(vehicle));
  Interference out;
  for (int j = 0; j < sc.num_vehicles; ++j) {
    if (j == vehicle) continue;
    if (ordered.rank[j] < segment) {
      // j already switched to comm; its transmission leaks into the radar Rx.
      out.comm += sc.tx_power[j] * params.tx_gain * sc.comm_gain[vehicle][j] *
                  params.rx_gain;
    } else {
      // j still in radar mode: radar-j-target-radar-i path.
      out.radar += sc.tx_power[j] *
                   radar_cross_gain(params, sc.rcs[vehicle][j],
                                    sc.target_distance[vehicle],
                                    sc.target_distance[j]);
    }
  }
  return out;
}

Interference comm_segment_interference(const Scenario& sc,
                                       const SystemParams& params,
                                       const OrderedAllocation& ordered,
                                       int vehicle, int segment) {
  check_vehicle(sc, vehicle);
  if (segment < ordered.rank[vehicle] || segment > sc.num_vehicles)
    throw std::domain_error("segment " + std::to_string(segment) +
                            " outside comm span of vehicle " +
                            std::to_string(vehicle));
  Interference out;
  const int partner = sc.partner[vehicle];
  for (int k = 0; k < sc.num_vehicles; ++k) {
    if (k == vehicle || k == partner) continue;
    if (ordered.rank[k] <= segment) {
      out.comm += sc.tx_power[k] * params.tx_gain * sc.comm_gain[vehicle][k] *
                  params.rx_gain;
    } else {
      out.radar +=
          sc.tx_power[k] * radar_to_comm_gain(params, sc.pair_distance[vehicle][k]);
    }
  }
  return out;
}

double radar_segment_sinr(const Scenario& sc, const SystemParams& params,
                          const OrderedAllocation& ordered, int vehicle,
                          int segment) {
  const Interference itf =
      radar_segment_interference(sc, params, ordered, vehicle, segment);
  const double signal =
      sc.tx_power[vehicle] * radar_self_gain(params, sc.rcs[vehicle][vehicle],
                                             sc.target_distance[vehicle]);
  return signal / (itf.comm + itf.radar + params.noise_power());
}

double comm_segment_sinr(const Scenario& sc, const SystemParams& params,
                         const OrderedAllocation& ordered, int vehicle,
                         int segment) {
  const Interference itf =
      comm_segment_interference(sc, params, ordered, vehicle, segment);
  const double signal = sc.tx_power[vehicle] * params.tx_gain *
                        sc.comm_gain[vehicle][sc.partner[vehicle]] *
                        params.rx_gain;
  return signal / (itf.comm + itf.radar + params.noise_power());
}

double radar_mutual_information(const Scenario& sc, const SystemParams& params,
                                const OrderedAllocation& ordered, int vehicle) {
  check_vehicle(sc, vehicle);
  double sum = 0.0;
  for (int n = 1; n <= ordered.rank[vehicle]; ++n) {
    const double width = ordered.segment_width(n);
    if (width == 0.0) continue;
    sum += width * log2_1p(radar_segment_sinr(sc, params, ordered, vehicle, n));
  }
  return params.frame_duration * params.bandwidth * sum;
}

double comm_rate(const Scenario& sc, const SystemParams& params,
                 const OrderedAllocation& ordered, int vehicle) {
  check_vehicle(sc, vehicle);
  double sum = 0.0;
  for (int n = ordered.rank[vehicle]; n <= sc.num_vehicles; ++n) {
    const double width = ordered.segment_width(n + 1);
    if (width == 0.0) continue;
    sum += width * log2_1p(comm_segment_sinr(sc, params, ordered, vehicle, n));
  }
  return params.bandwidth * sum;
}

double comm_capacity(const Scenario& sc, const SystemParams& params,
                     const OrderedAllocation& ordered, int vehicle,
                     CapacityMode mode) {
  const double base = params.frame_duration * comm_rate(sc, params, ordered, vehicle);
  if (mode == CapacityMode::Consistent) return base;
  const double a = ordered.bound(ordered.rank[vehicle]);
  return (1.0 - a) * base;
}

Totals totals(const Scenario& sc, const SystemParams& params,
              const AllocationProfile& profile, CapacityMode mode) {
  if (profile.size() != sc.num_vehicles)
    throw std::invalid_argument("profile size does not match scenario");
  const OrderedAllocation ordered = order_allocation(profile);
  Totals out;
  out.per_vehicle.resize(sc.num_vehicles);
  for (int i = 0; i < sc.num_vehicles; ++i) {
    VehicleMetrics& m = out.per_vehicle[i];
    m.radar_mi = radar_mutual_information(sc, params, ordered, i);
    m.comm_rate = comm_rate(sc, params, ordered, i);
    m.comm_capacity = comm_capacity(sc, params, ordered, i, mode);
    m.c2_satisfied = m.radar_mi <= m.comm_capacity;
    out.radar_mi_total += m.radar_mi;
    out.comm_capacity_total += m.comm_capacity;
  }
  return out;
}

}  // namespace jscis
