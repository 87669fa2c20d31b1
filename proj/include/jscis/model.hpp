#pragma once

#include <cstdint>
#include <vector>

// Core domain types: system parameters, quantized time-allocation profiles
// and their sorted segment view, and the P/Q frame layout.

namespace jscis {

inline constexpr double kSpeedOfLight = 299792458.0;

struct SystemParams {
  double carrier_frequency = 28e9;        // Hz
  double bandwidth = 800e6;               // Hz
  double noise_psd = 3.9810717055e-21;    // W/Hz (-174 dBm/Hz)
  double tx_gain = 63.09573444801933;     // linear (18 dB)
  double rx_gain = 63.09573444801933;     // linear (18 dB)
  double main_lobe_width = 0.5235987755982988;  // rad (pi/6)
  double frame_duration = 1.0;            // s
  int num_subframes = 10;

  double wavelength() const { return kSpeedOfLight / carrier_frequency; }
  double noise_power() const { return noise_psd * bandwidth; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Per-vehicle radar-duration ratios on the grid {k/Ns : 1 <= k <= Ns-1}.
// Stored as integer numerators so ordering and segment sums stay exact.
struct AllocationProfile {
  std::vector<int> numerators;
  int ns = 10;

  int size() const { return static_cast<int>(numerators.size()); }
  double ratio(int vehicle) const {
    return static_cast<double>(numerators[vehicle]) / ns;
  }
  std::vector<double> ratios() const;

  bool operator==(const AllocationProfile&) const = default;
};

AllocationProfile make_profile(const std::vector<int>& ratio_indices, int ns);

// Sorted segment bounds with sentinels: bounds[0] = 0, bounds[N+1] = Ns/Ns.
// rank[i] is the 1-based position of vehicle i's ratio in the sorted order;
// ties are broken by ascending vehicle index.
struct OrderedAllocation {
  std::vector<int> bound_numerators;  // length N+2, non-decreasing, 0..ns
  std::vector<int> rank;              // length N, permutation of 1..N
  int ns = 10;

  int num_vehicles() const { return static_cast<int>(rank.size()); }
  double bound(int n) const {
    return static_cast<double>(bound_numerators[n]) / ns;
  }
  // Width of segment n, i.e. bound(n) - bound(n-1); zero for tied ratios.
  double segment_width(int n) const {
    return static_cast<double>(bound_numerators[n] - bound_numerators[n - 1]) /
           ns;
  }
};

OrderedAllocation order_allocation(const AllocationProfile& profile);

struct FrameLayout {
  int sensing_subframes = 0;   // P
  int comm_subframes = 0;      // Q
  int radar_symbols = 0;       // K_R
  int pdsch_symbols = 0;       // K_C
  double slot_ratio = 0.0;     // K_R / (K_R + K_C)
};

// R = K_R / (K_R + K_C); 0 when no radar symbols.
double slot_ratio(int radar_symbols, int pdsch_symbols);

FrameLayout layout_from_ratio(double a, int ns, int symbols_per_subframe);

}  // namespace jscis
