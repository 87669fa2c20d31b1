#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jscis/aoi.hpp"
#include "jscis/channel.hpp"
#include "jscis/game.hpp"
#include "jscis/harness.hpp"
#include "jscis/metrics.hpp"
#include "jscis/model.hpp"

namespace py = pybind11;
using namespace jscis;

PYBIND11_MODULE(_jscis, m) {
  m.doc() = "Joint radar/communication time-allocation simulator and solver";

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("carrier_frequency", &SystemParams::carrier_frequency)
      .def_readwrite("bandwidth", &SystemParams::bandwidth)
      .def_readwrite("noise_psd", &SystemParams::noise_psd)
      .def_readwrite("tx_gain", &SystemParams::tx_gain)
      .def_readwrite("rx_gain", &SystemParams::rx_gain)
      .def_readwrite("main_lobe_width", &SystemParams::main_lobe_width)
      .def_readwrite("frame_duration", &SystemParams::frame_duration)
      .def_readwrite("num_subframes", &SystemParams::num_subframes)
      .def("wavelength", &SystemParams::wavelength)
      .def("noise_power", &SystemParams::noise_power)
      .def("validate", &SystemParams::validate);

  py::class_<AllocationProfile>(m, "AllocationProfile")
      .def_readonly("numerators", &AllocationProfile::numerators)
      .def_readonly("ns", &AllocationProfile::ns)
      .def("ratios", &AllocationProfile::ratios)
      .def("__len__", &AllocationProfile::size);

  py::class_<OrderedAllocation>(m, "OrderedAllocation")
      .def_readonly("bound_numerators", &OrderedAllocation::bound_numerators)
      .def_readonly("rank", &OrderedAllocation::rank)
      .def("bound", &OrderedAllocation::bound)
      .def("segment_width", &OrderedAllocation::segment_width);

  py::class_<FrameLayout>(m, "FrameLayout")
      .def_readonly("sensing_subframes", &FrameLayout::sensing_subframes)
      .def_readonly("comm_subframes", &FrameLayout::comm_subframes)
      .def_readonly("radar_symbols", &FrameLayout::radar_symbols)
      .def_readonly("pdsch_symbols", &FrameLayout::pdsch_symbols)
      .def_readonly("slot_ratio", &FrameLayout::slot_ratio);

  m.def("make_profile", &make_profile, py::arg("ratio_indices"), py::arg("ns"));
  m.def("order_allocation", &order_allocation);
  m.def("layout_from_ratio", &layout_from_ratio, py::arg("a"), py::arg("ns"),
        py::arg("symbols_per_subframe"));
  m.def("slot_ratio", &slot_ratio);

  py::enum_<RcsCase>(m, "RcsCase")
      .value("AllOne", RcsCase::AllOne)
      .value("CrossHalf", RcsCase::CrossHalf)
      .value("CrossTwo", RcsCase::CrossTwo)
      .value("CrossRandom", RcsCase::CrossRandom);

  py::class_<ScenarioSpec>(m, "ScenarioSpec")
      .def(py::init<>())
      .def_readwrite("num_vehicles", &ScenarioSpec::num_vehicles)
      .def_readwrite("road_length", &ScenarioSpec::road_length)
      .def_readwrite("lane_separation", &ScenarioSpec::lane_separation)
      .def_readwrite("target_lead", &ScenarioSpec::target_lead)
      .def_readwrite("max_distance", &ScenarioSpec::max_distance)
      .def_readwrite("tx_power", &ScenarioSpec::tx_power)
      .def_readwrite("shadow_sigma_db", &ScenarioSpec::shadow_sigma_db)
      .def_readwrite("comm_partner", &ScenarioSpec::comm_partner);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("num_vehicles", &Scenario::num_vehicles)
      .def_readonly("positions", &Scenario::positions)
      .def_readonly("tx_power", &Scenario::tx_power)
      .def_readonly("target_distance", &Scenario::target_distance)
      .def_readonly("rcs", &Scenario::rcs)
      .def_readonly("comm_gain", &Scenario::comm_gain)
      .def_readonly("pair_distance", &Scenario::pair_distance)
      .def_readonly("partner", &Scenario::partner)
      .def_readonly("seed", &Scenario::seed);

  m.def("radar_self_gain", &radar_self_gain);
  m.def("radar_cross_gain", &radar_cross_gain);
  m.def("comm_link_gain", &comm_link_gain);
  m.def("radar_to_comm_gain", &radar_to_comm_gain);
  m.def("build_scenario", &build_scenario, py::arg("spec"), py::arg("params"),
        py::arg("rcs_case"), py::arg("seed"));

  py::enum_<CapacityMode>(m, "CapacityMode")
      .value("Literal", CapacityMode::Literal)
      .value("Consistent", CapacityMode::Consistent);

  py::class_<VehicleMetrics>(m, "VehicleMetrics")
      .def_readonly("radar_mi", &VehicleMetrics::radar_mi)
      .def_readonly("comm_rate", &VehicleMetrics::comm_rate)
      .def_readonly("comm_capacity", &VehicleMetrics::comm_capacity)
      .def_readonly("c2_satisfied", &VehicleMetrics::c2_satisfied);

  py::class_<Totals>(m, "Totals")
      .def_readonly("radar_mi_total", &Totals::radar_mi_total)
      .def_readonly("comm_capacity_total", &Totals::comm_capacity_total)
      .def_readonly("per_vehicle", &Totals::per_vehicle);

  m.def("radar_mutual_information", &radar_mutual_information);
  m.def("comm_rate", &comm_rate);
  m.def("comm_capacity", &comm_capacity);
  m.def("totals", &totals, py::arg("scenario"), py::arg("params"),
        py::arg("profile"), py::arg("mode") = CapacityMode::Literal);

  py::class_<AoiParams>(m, "AoiParams")
      .def(py::init<>())
      .def_readwrite("arrival_rate", &AoiParams::arrival_rate)
      .def_readwrite("service_rate", &AoiParams::service_rate)
      .def_readwrite("sinr_threshold", &AoiParams::sinr_threshold)
      .def_readwrite("network_density", &AoiParams::network_density)
      .def_readwrite("link_distance", &AoiParams::link_distance)
      .def_readwrite("path_loss_exponent", &AoiParams::path_loss_exponent)
      .def_readwrite("main_lobe_width", &AoiParams::main_lobe_width)
      .def_readwrite("aoi_max", &AoiParams::aoi_max);

  py::class_<AoiMinimum>(m, "AoiMinimum")
      .def_readonly("rho_star", &AoiMinimum::rho_star)
      .def_readonly("aoi_star", &AoiMinimum::aoi_star);

  m.def("success_probability", &success_probability);
  m.def("average_aoi_mm1", &average_aoi_mm1);
  m.def("average_aoi_with_loss", &average_aoi_with_loss);
  m.def("aoi_minimizer", &aoi_minimizer);
  m.def("simulate_fcfs_queue", &simulate_fcfs_queue, py::arg("arrival_rate"),
        py::arg("service_rate"), py::arg("p_loss"), py::arg("horizon"),
        py::arg("seed"));
  m.def("feasible_ratio_set", &feasible_ratio_set);

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init<>())
      .def_readwrite("penalty_eta", &GameConfig::penalty_eta)
      .def_readwrite("strategy_sets", &GameConfig::strategy_sets)
      .def_readwrite("ns", &GameConfig::ns)
      .def_readwrite("capacity_mode", &GameConfig::capacity_mode)
      .def_readwrite("apply_c3_filter", &GameConfig::apply_c3_filter)
      .def_readwrite("max_iterations", &GameConfig::max_iterations);

  py::class_<TrajectoryPoint>(m, "TrajectoryPoint")
      .def_readonly("iteration", &TrajectoryPoint::iteration)
      .def_readonly("vehicle", &TrajectoryPoint::vehicle)
      .def_readonly("profile", &TrajectoryPoint::profile)
      .def_readonly("utility", &TrajectoryPoint::utility);

  py::class_<GameRun>(m, "GameRun")
      .def_readonly("trajectory", &GameRun::trajectory)
      .def_readonly("final_profile", &GameRun::final_profile)
      .def_readonly("final_utility", &GameRun::final_utility)
      .def_readonly("final_radar_mi", &GameRun::final_radar_mi)
      .def_readonly("iterations", &GameRun::iterations)
      .def_readonly("converged", &GameRun::converged)
      .def_readonly("feasible", &GameRun::feasible)
      .def_readonly("ne_certificate", &GameRun::ne_certificate);

  py::class_<ExhaustiveResult>(m, "ExhaustiveResult")
      .def_readonly("best_profile", &ExhaustiveResult::best_profile)
      .def_readonly("best_utility", &ExhaustiveResult::best_utility)
      .def_readonly("nash_profiles", &ExhaustiveResult::nash_profiles)
      .def_readonly("nash_utilities", &ExhaustiveResult::nash_utilities);

  py::class_<BaselineResult>(m, "BaselineResult")
      .def_readonly("profile", &BaselineResult::profile)
      .def_readonly("utility", &BaselineResult::utility)
      .def_readonly("radar_mi", &BaselineResult::radar_mi)
      .def_readonly("positive", &BaselineResult::positive);

  py::class_<AnnealingSchedule>(m, "AnnealingSchedule")
      .def(py::init<>())
      .def_readwrite("initial_temp_fraction", &AnnealingSchedule::initial_temp_fraction)
      .def_readwrite("cooling", &AnnealingSchedule::cooling)
      .def_readwrite("proposals_per_temperature",
                     &AnnealingSchedule::proposals_per_temperature)
      .def_readwrite("floor_fraction", &AnnealingSchedule::floor_fraction);

  m.def("default_game_config", &default_game_config);
  m.def("utility", &utility);
  m.def("ctra_solve", &ctra_solve);
  m.def("verify_ne", &verify_ne);
  m.def("exhaustive_oracle", &exhaustive_oracle, py::arg("scenario"),
        py::arg("params"), py::arg("cfg"), py::arg("budget") = 1000000);
  m.def("baseline_uniform", &baseline_uniform);
  m.def("baseline_random", &baseline_random);
  m.def("baseline_annealing", &baseline_annealing);
}
