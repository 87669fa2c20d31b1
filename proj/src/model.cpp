#include "jscis/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jscis {

void SystemParams::validate() const {
  if (carrier_frequency <= 0)
    throw std::invalid_argument("carrier_frequency must be positive");
  if (bandwidth <= 0) throw std::invalid_argument("bandwidth_B must be positive");
  if (noise_psd <= 0) throw std::invalid_argument("noise_psd_N0 must be positive");
  if (tx_gain <= 0) throw std::invalid_argument("tx_antenna_gain_Gt must be positive");
  if (rx_gain <= 0) throw std::invalid_argument("rx_antenna_gain_Gr must be positive");
  if (main_lobe_width <= 0 || main_lobe_width >= 2 * M_PI)
    throw std::invalid_argument("main_lobe_width_phi must be in (0, 2*pi)");
  if (frame_duration <= 0)
    throw std::invalid_argument("frame_duration_T must be positive");
  if (num_subframes < 2)
    throw std::invalid_argument("num_subframes_Ns must be at least 2");
}

std::vector<double> AllocationProfile::ratios() const {
  std::vector<double> r(numerators.size());
  for (std::size_t i = 0; i < numerators.size(); ++i)
    r[i] = static_cast<double>(numerators[i]) / ns;
  return r;
}

AllocationProfile make_profile(const std::vector<int>& ratio_indices, int ns) {
  if (ns < 2) throw std::invalid_argument("Ns must be at least 2");
  if (ratio_indices.empty())
    throw std::invalid_argument("profile needs at least one vehicle");
  for (std::size_t i = 0; i < ratio_indices.size(); ++i) {
    if (ratio_indices[i] < 1 || ratio_indices[i] > ns - 1)
      throw std::domain_error("ratio index " + std::to_string(ratio_indices[i]) +
                              " for vehicle " + std::to_string(i) +
                              " outside [1, Ns-1]");
  }
  return AllocationProfile{ratio_indices, ns};
}

OrderedAllocation order_allocation(const AllocationProfile& profile) {
  const int n = profile.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return profile.numerators[a] < profile.numerators[b];
  });

  OrderedAllocation out;
  out.ns = profile.ns;
  out.bound_numerators.resize(n + 2);
  out.bound_numerators.front() = 0;
  out.bound_numerators.back() = profile.ns;
  out.rank.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    out.bound_numerators[pos + 1] = profile.numerators[order[pos]];
    out.rank[order[pos]] = pos + 1;
  }
  return out;
}

double slot_ratio(int radar_symbols, int pdsch_symbols) {
  if (radar_symbols < 0 || pdsch_symbols < 0)
    throw std::domain_error("symbol counts must be non-negative");
  if (radar_symbols == 0) return 0.0;
  return static_cast<double>(radar_symbols) / (radar_symbols + pdsch_symbols);
}

FrameLayout layout_from_ratio(double a, int ns, int symbols_per_subframe) {
  if (ns < 2) throw std::invalid_argument("Ns must be at least 2");
  if (symbols_per_subframe < 0)
    throw std::invalid_argument("symbols_per_subframe must be non-negative");
  const double scaled = a * ns;
  const int p = static_cast<int>(std::lround(scaled));
  if (std::abs(scaled - p) > 1e-9 || p < 1 || p > ns - 1)
    throw std::domain_error("ratio " + std::to_string(a) +
                            " is not on the k/Ns grid");
  FrameLayout layout;
  layout.sensing_subframes = p;
  layout.comm_subframes = ns - p;
  layout.radar_symbols = p * symbols_per_subframe;
  layout.pdsch_symbols = (ns - p) * symbols_per_subframe;
  layout.slot_ratio = slot_ratio(layout.radar_symbols, layout.pdsch_symbols);
  return layout;
}

}  // namespace jscis
