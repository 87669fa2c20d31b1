#pragma once

#include <cstdint>
#include <vector>

// Information-freshness analytics: SINR-threshold packet success probability,
// loss-thinned M/M/1 average AoI, a discrete-event FCFS queue, and the
// feasible-ratio scan.

namespace jscis {

struct AoiParams {
  double arrival_rate = 0.5;        // Lambda, packets/s
  double service_rate = 1.0;        // mu, packets/s
  double sinr_threshold = 5.0;      // gamma_c, linear
  double network_density = 1e-4;    // lambda, vehicles/m^2
  double link_distance = 200.0;     // d, m
  double path_loss_exponent = 2.0;  // alpha
  double main_lobe_width = 0.5235987755982988;  // phi, rad (pi/6)
  double aoi_max = 4.0;             // Delta_max, units of 1/mu

  void validate() const;  // throws std::invalid_argument
};

// p = exp(-(phi/2pi)^2 * a * lambda * pi * (gamma_c / d^-alpha)^(2/alpha))
double success_probability(const AoiParams& params, double a);

// Closed-form FCFS M/M/1 average AoI: (1/mu)(1 + 1/rho + rho^2/(1-rho)).
double average_aoi_mm1(double rho, double mu);

// M/M/1 AoI at the loss-thinned load rho' = p * Lambda / mu.
double average_aoi_with_loss(const AoiParams& params, double a);

struct AoiMinimum {
  double rho_star = 0.0;
  double aoi_star = 0.0;
};

// Numeric minimizer of the closed form over rho in (0, 1), to 1e-6.
AoiMinimum aoi_minimizer(double mu);

// Event-driven FCFS M/M/1 with Bernoulli loss applied at arrival (thinning).
// Returns the time-average of the sawtooth age process; +inf if no packet is
// ever delivered over the horizon.
double simulate_fcfs_queue(double arrival_rate, double service_rate,
                           double p_loss, double horizon, std::uint64_t seed);

// { a in {k/ns} : queue stable and average AoI <= aoi_max }, as numerators k.
std::vector<int> feasible_ratio_set(const AoiParams& params, int ns);

}  // namespace jscis
