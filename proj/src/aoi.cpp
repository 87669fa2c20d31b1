#include "jscis/aoi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jscis/rng.hpp"

namespace jscis {

void AoiParams::validate() const {
  if (arrival_rate <= 0) throw std::invalid_argument("arrival_rate_Lambda must be positive");
  if (service_rate <= 0) throw std::invalid_argument("service_rate_mu must be positive");
  if (sinr_threshold <= 0) throw std::invalid_argument("sinr_threshold_gamma_c must be positive");
  if (network_density < 0) throw std::invalid_argument("network_density_lambda must be non-negative");
  if (link_distance <= 0) throw std::invalid_argument("link_distance_d must be positive");
  if (path_loss_exponent < 2) throw std::invalid_argument("path_loss_exponent_alpha must be >= 2");
  if (main_lobe_width <= 0 || main_lobe_width >= 2 * M_PI)
    throw std::invalid_argument("main_lobe_width_phi must be in (0, 2*pi)");
  if (aoi_max <= 0) throw std::invalid_argument("aoi_max_Delta must be positive");
}

double success_probability(const AoiParams& params, double a) {
  if (a <= 0 || a >= 1)
    throw std::domain_error("allocation ratio must be in (0, 1)");
  params.validate();
  const double beam = params.main_lobe_width / (2 * M_PI);
  const double exponent =
      beam * beam * a * params.network_density * M_PI *
      std::pow(params.sinr_threshold *
                   std::pow(params.link_distance, params.path_loss_exponent),
               2.0 / params.path_loss_exponent);
  return std::exp(-exponent);
}

double average_aoi_mm1(double rho, double mu) {
  if (rho <= 0 || rho >= 1)
    throw std::domain_error("load rho must be in (0, 1): unstable queue");
  if (mu <= 0) throw std::domain_error("service rate must be positive");
  return (1.0 + 1.0 / rho + rho * rho / (1.0 - rho)) / mu;
}

double average_aoi_with_loss(const AoiParams& params, double a) {
  const double p = success_probability(params, a);
  const double rho_eff = p * params.arrival_rate / params.service_rate;
  if (rho_eff >= 1)
    throw std::domain_error("thinned load rho' >= 1: unstable queue");
  return average_aoi_mm1(rho_eff, params.service_rate);
}

AoiMinimum aoi_minimizer(double mu) {
  if (mu <= 0) throw std::domain_error("service rate must be positive");
  // Golden-section search; the closed form is strictly convex on (0, 1).
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  auto f = [](double rho) {
    return 1.0 + 1.0 / rho + rho * rho / (1.0 - rho);
  };
  double fc = f(c), fd = f(d);
  while (hi - lo > 1e-9) {
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  const double rho_star = (lo + hi) / 2.0;
  return {rho_star, f(rho_star) / mu};
}

double simulate_fcfs_queue(double arrival_rate, double service_rate,
                           double p_loss, double horizon, std::uint64_t seed) {
  if (arrival_rate <= 0 || service_rate <= 0)
    throw std::domain_error("rates must be positive");
  if (p_loss < 0 || p_loss > 1)
    throw std::domain_error("loss probability must be in [0, 1]");
  if (horizon <= 0) throw std::domain_error("horizon must be positive");
  const double load = (1.0 - p_loss) * arrival_rate / service_rate;
  if (load >= 1)
    throw std::domain_error("effective load p*Lambda/mu >= 1: unstable queue");

  Rng rng(seed);
  double t = 0.0;              // next arrival time
  double server_free = 0.0;    // time the server becomes idle
  double prev_time = 0.0;      // last age reset
  double prev_age = 0.0;
  double integral = 0.0;
  bool any_served = false;

  for (;;) {
    t += rng.exponential(arrival_rate);
    if (t > horizon) break;
    if (p_loss > 0.0 && rng.uniform() < p_loss) continue;  // thinned at arrival
    const double start = std::max(t, server_free);
    const double depart = start + rng.exponential(service_rate);
    server_free = depart;
    if (depart > horizon) continue;  // in service past the observation window
    const double dt = depart - prev_time;
    integral += prev_age * dt + dt * dt / 2.0;
    prev_age = depart - t;  // age resets to the system time of this update
    prev_time = depart;
    any_served = true;
  }
  if (!any_served) return std::numeric_limits<double>::infinity();
  const double dt = horizon - prev_time;
  integral += prev_age * dt + dt * dt / 2.0;
  return integral / horizon;
}

std::vector<int> feasible_ratio_set(const AoiParams& params, int ns) {
  if (ns < 2) throw std::invalid_argument("Ns must be at least 2");
  params.validate();
  std::vector<int> feasible;
  for (int k = 1; k <= ns - 1; ++k) {
    const double a = static_cast<double>(k) / ns;
    const double p = success_probability(params, a);
    const double rho_eff = p * params.arrival_rate / params.service_rate;
    if (rho_eff <= 0 || rho_eff >= 1) continue;
    if (average_aoi_mm1(rho_eff, params.service_rate) <= params.aoi_max)
      feasible.push_back(k);
  }
  return feasible;
}

}  // namespace jscis
