#pragma once

#include <vector>

#include "jscis/channel.hpp"
#include "jscis/model.hpp"

// Per-segment interference decomposition, SINRs, radar mutual information and
// communication rate/capacity for a given Scenario and AllocationProfile.

namespace jscis {

enum class CapacityMode { Literal, Consistent };

struct Interference {
  double comm = 0.0;   // W, from vehicles already in their comm span
  double radar = 0.0;  // W, from vehicles still in their radar span
};

// Interference seen by vehicle i's radar in segment n, 1 <= n <= rank(i).
Interference radar_segment_interference(const Scenario& sc,
                                        const SystemParams& params,
                                        const OrderedAllocation& ordered,
                                        int vehicle, int segment);

// Interference seen by vehicle i's comm receiver in segment n,
// rank(i) <= n <= N. The comm partner is excluded from both sums.
Interference comm_segment_interference(const Scenario& sc,
                                       const SystemParams& params,
                                       const OrderedAllocation& ordered,
                                       int vehicle, int segment);

double radar_segment_sinr(const Scenario& sc, const SystemParams& params,
                          const OrderedAllocation& ordered, int vehicle,
                          int segment);

double comm_segment_sinr(const Scenario& sc, const SystemParams& params,
                         const OrderedAllocation& ordered, int vehicle,
                         int segment);

// T*B * sum over radar segments of width * log2(1 + sinr), bits per frame.
double radar_mutual_information(const Scenario& sc, const SystemParams& params,
                                const OrderedAllocation& ordered, int vehicle);

// B * sum over comm segments of width * log2(1 + sinr), bits per second.
double comm_rate(const Scenario& sc, const SystemParams& params,
                 const OrderedAllocation& ordered, int vehicle);

// Bits per frame. Literal keeps the extra (1 - a_i) prefactor as printed;
// Consistent is T * comm_rate.
double comm_capacity(const Scenario& sc, const SystemParams& params,
                     const OrderedAllocation& ordered, int vehicle,
                     CapacityMode mode);

struct VehicleMetrics {
  double radar_mi = 0.0;       // bits per frame
  double comm_rate = 0.0;      // bits per second
  double comm_capacity = 0.0;  // bits per frame
  bool c2_satisfied = false;   // radar_mi <= comm_capacity
};

struct Totals {
  double radar_mi_total = 0.0;
  double comm_capacity_total = 0.0;
  std::vector<VehicleMetrics> per_vehicle;
};

Totals totals(const Scenario& sc, const SystemParams& params,
              const AllocationProfile& profile,
              CapacityMode mode = CapacityMode::Literal);

}  // namespace jscis
