// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the hetsim core: configuration, drop generation, the
// cell-selection game, sweeps and the channel-borrowing pool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hetsim/dynalloc.hpp"
#include "hetsim/errors.hpp"
#include "hetsim/experiment.hpp"
#include "hetsim/scenario_io.hpp"
#include "hetsim/version.hpp"

namespace py = pybind11;
using namespace hetsim;

PYBIND11_MODULE(_hetsim, m) {
  m.doc() = "Two-tier macro/femtocell access-game simulator";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Position>(m, "Position")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y)
      .def("__repr__", [](const Position& p) {
        return "Position(x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) + ")";
      });

  py::class_<RadioConfig>(m, "RadioConfig")
      .def(py::init<>())
      .def_readwrite("bandwidth_hz", &RadioConfig::bandwidth_hz)
      .def_readwrite("n_subchannels", &RadioConfig::n_subchannels)
      .def_readwrite("noise_density_dbm_per_hz", &RadioConfig::noise_density_dbm_per_hz)
      .def_readwrite("noise_figure_db", &RadioConfig::noise_figure_db)
      .def_readwrite("p_max_macro_dbm", &RadioConfig::p_max_macro_dbm)
      .def_readwrite("p_max_fap_dbm", &RadioConfig::p_max_fap_dbm)
      .def_readwrite("gamma_db", &RadioConfig::gamma_db)
      .def_readwrite("psi_db", &RadioConfig::psi_db);

  py::class_<PropagationConfig>(m, "PropagationConfig")
      .def(py::init<>())
      .def_readwrite("ref_loss_db", &PropagationConfig::ref_loss_db)
      .def_readwrite("indoor_exponent", &PropagationConfig::indoor_exponent)
      .def_readwrite("outdoor_exponent", &PropagationConfig::outdoor_exponent)
      .def_readwrite("wall_loss_db", &PropagationConfig::wall_loss_db)
      .def_readwrite("shadowing_sigma_db", &PropagationConfig::shadowing_sigma_db);

  py::class_<GeometryConfig>(m, "GeometryConfig")
      .def(py::init<>())
      .def_readwrite("macro_radius_m", &GeometryConfig::macro_radius_m)
      .def_readwrite("mbs_fap_distance_m", &GeometryConfig::mbs_fap_distance_m)
      .def_readwrite("room_side_m", &GeometryConfig::room_side_m)
      .def_readwrite("n_subscribers", &GeometryConfig::n_subscribers)
      .def_readwrite("n_indoor_nonsubscribers", &GeometryConfig::n_indoor_nonsubscribers)
      .def_readwrite("n_outdoor_nonsubscribers", &GeometryConfig::n_outdoor_nonsubscribers);

  py::class_<GameConfig>(m, "GameConfig")
      .def(py::init<>())
      .def_readwrite("beta", &GameConfig::beta)
      .def_readwrite("price", &GameConfig::price)
      .def_readwrite("chi_bps", &GameConfig::chi_bps)
      .def_readwrite("price_adjustor", &GameConfig::price_adjustor);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("radio", &ScenarioConfig::radio)
      .def_readwrite("propagation", &ScenarioConfig::propagation)
      .def_readwrite("geometry", &ScenarioConfig::geometry)
      .def_readwrite("game", &ScenarioConfig::game)
      .def("__eq__", [](const ScenarioConfig& a, const ScenarioConfig& b) { return a == b; });

  py::class_<ValidatedScenario>(m, "ValidatedScenario")
      .def_property_readonly("config", &ValidatedScenario::config);

  m.def("default_scenario", &default_scenario);
  m.def("validate", &validate, py::arg("config"),
        "Range-check a ScenarioConfig; raises ValidationError on the first bad field");
  m.def("scenario_to_json_str",
        [](const ScenarioConfig& cfg) { return scenario_to_json(cfg).dump(); });
  m.def("scenario_from_json_str", [](const std::string& text) {
    return scenario_from_json(nlohmann::json::parse(text));
  });
  m.def("load_scenario_file", &load_scenario_file, py::arg("path"));
  m.def("scenario_hash_hex", &scenario_hash_hex, py::arg("config"));

  py::enum_<LinkKind>(m, "LinkKind")
      .value("Indoor", LinkKind::Indoor)
      .value("OutdoorOrCrossWall", LinkKind::OutdoorOrCrossWall);

  py::class_<LinkGain>(m, "LinkGain")
      .def(py::init<>())
      .def_readwrite("gain_db", &LinkGain::gain_db)
      .def_readwrite("crosses_wall", &LinkGain::crosses_wall);

  m.def("db_to_linear", &db_to_linear);
  m.def("linear_to_db", &linear_to_db);
  m.def("path_loss_db", &path_loss_db, py::arg("distance_m"), py::arg("kind"),
        py::arg("crosses_wall"), py::arg("propagation"), py::arg("shadowing_db"));
  m.def("link_gain", &link_gain, py::arg("tx"), py::arg("rx"), py::arg("tx_indoor"),
        py::arg("rx_indoor"), py::arg("propagation"), py::arg("shadowing_db"));
  m.def("received_power_dbm", &received_power_dbm);
  m.def("noise_power_dbm", &noise_power_dbm);

  py::enum_<UeCategory>(m, "UeCategory")
      .value("Subscriber", UeCategory::Subscriber)
      .value("IndoorNonsubscriber", UeCategory::IndoorNonsubscriber)
      .value("OutdoorNonsubscriber", UeCategory::OutdoorNonsubscriber);

  py::enum_<UeRole>(m, "UeRole")
      .value("Subscriber", UeRole::Subscriber)
      .value("Player", UeRole::Player)
      .value("Independent", UeRole::Independent);

  py::class_<UeRecord>(m, "UeRecord")
      .def(py::init<>())
      .def_readwrite("id", &UeRecord::id)
      .def_readwrite("position", &UeRecord::position)
      .def_readwrite("category", &UeRecord::category)
      .def_readwrite("gain_macro", &UeRecord::gain_macro)
      .def_readwrite("gain_fap", &UeRecord::gain_fap)
      .def_readonly("rsp_macro_dbm", &UeRecord::rsp_macro_dbm)
      .def_readonly("rsp_fap_dbm", &UeRecord::rsp_fap_dbm)
      .def_readonly("role", &UeRecord::role);

  py::class_<Drop>(m, "Drop")
      .def_readonly("ues", &Drop::ues)
      .def_readonly("subscriber_ids", &Drop::subscriber_ids)
      .def_readonly("player_ids", &Drop::player_ids)
      .def_readonly("independent_ids", &Drop::independent_ids)
      .def_readonly("mute_count", &Drop::mute_count)
      .def_readonly("noise_dbm", &Drop::noise_dbm)
      .def_readonly("scenario", &Drop::scenario)
      .def_property_readonly("n_subscribers", &Drop::n_subscribers)
      .def_property_readonly("n_players", &Drop::n_players)
      .def_property_readonly("n_independents", &Drop::n_independents);

  m.def("make_drop", &make_drop, py::arg("ues"), py::arg("scenario"));
  m.def("generate_drop", &generate_drop, py::arg("scenario"), py::arg("seed"),
        py::arg("drop_index"));

  py::class_<StrategyProfile>(m, "StrategyProfile")
      .def(py::init<>())
      .def_readwrite("choices", &StrategyProfile::choices)
      .def("femto_count", &StrategyProfile::femto_count)
      .def_static("all_macro", &StrategyProfile::all_macro)
      .def_static("first_on_femto", &StrategyProfile::first_on_femto)
      .def("__eq__", [](const StrategyProfile& a, const StrategyProfile& b) { return a == b; });

  m.def("femto_served_ids", &femto_served_ids);
  m.def("macro_served_ids", &macro_served_ids);
  m.def("worst_femto_sinr", [](const Drop& d, const std::vector<int>& ids) {
    return worst_femto_sinr(d, ids);
  });
  m.def("worst_macro_snr", [](const Drop& d, const std::vector<int>& ids) {
    return worst_macro_snr(d, ids);
  });
  m.def("fap_capacity_ungated", &fap_capacity_ungated);
  m.def("fap_capacity", &fap_capacity);
  m.def("macro_utility", &macro_utility);
  m.def("femto_utility", &femto_utility);
  m.def("subscriber_rate", &subscriber_rate);

  py::class_<RateBreakdown>(m, "RateBreakdown")
      .def_readonly("per_subscriber_bps", &RateBreakdown::per_subscriber_bps)
      .def_readonly("per_player_bps", &RateBreakdown::per_player_bps)
      .def_readonly("per_independent_bps", &RateBreakdown::per_independent_bps)
      .def_readonly("system_bps", &RateBreakdown::system_bps)
      .def_readonly("per_ue_bps", &RateBreakdown::per_ue_bps);

  m.def("rate_breakdown", &rate_breakdown);

  py::class_<UtilityTable>(m, "UtilityTable")
      .def_readonly("u0", &UtilityTable::u0)
      .def_readonly("u1", &UtilityTable::u1)
      .def_readonly("n_players", &UtilityTable::n_players);

  m.def("utility_table", &utility_table);
  m.def("ne_scan",
        [](const Drop& drop, const GameConfig& game) { return ne_scan(drop, game); });
  m.def("exhaustive_ne", &exhaustive_ne);
  m.def("best_response", &best_response);
  m.def("revenue", &revenue, py::arg("m"), py::arg("game"));

  py::class_<EquilibriumReport>(m, "EquilibriumReport")
      .def_readonly("ne_counts", &EquilibriumReport::ne_counts)
      .def_readonly("selected_m", &EquilibriumReport::selected_m)
      .def_readonly("selected_profile", &EquilibriumReport::selected_profile)
      .def_readonly("u0_at_ne", &EquilibriumReport::u0_at_ne)
      .def_readonly("u1_at_ne", &EquilibriumReport::u1_at_ne)
      .def_readonly("revenue", &EquilibriumReport::revenue)
      .def_readonly("rates", &EquilibriumReport::rates);

  m.def("solve", &solve, py::arg("drop"), py::arg("game"));
  m.def("optimal_price", [](const Drop& drop, const GameConfig& game,
                            const std::vector<double>& grid) {
    return optimal_price(drop, game, grid);
  });

  py::enum_<SweepKind>(m, "SweepKind")
      .value("Beta", SweepKind::Beta)
      .value("Distance", SweepKind::Distance)
      .value("Price", SweepKind::Price);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("kind", &SweepSpec::kind)
      .def_readwrite("grid", &SweepSpec::grid)
      .def_readwrite("n_drops", &SweepSpec::n_drops)
      .def_readwrite("seed", &SweepSpec::seed);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("grid_value", &SweepRow::grid_value)
      .def_readonly("avg_player_bps", &SweepRow::avg_player_bps)
      .def_readonly("avg_subscriber_bps", &SweepRow::avg_subscriber_bps)
      .def_readonly("avg_independent_bps", &SweepRow::avg_independent_bps)
      .def_readonly("avg_system_bps", &SweepRow::avg_system_bps)
      .def_readonly("avg_m", &SweepRow::avg_m)
      .def_readonly("avg_revenue", &SweepRow::avg_revenue)
      .def_readonly("ne_multiplicity_rate", &SweepRow::ne_multiplicity_rate)
      .def("as_array", &SweepRow::as_array);

  py::class_<SweepSummary>(m, "SweepSummary")
      .def_readonly("subscriber_peak_grid", &SweepSummary::subscriber_peak_grid)
      .def_readonly("revenue_peak_grid", &SweepSummary::revenue_peak_grid)
      .def_readonly("col_min", &SweepSummary::col_min)
      .def_readonly("col_max", &SweepSummary::col_max);

  m.def("default_grid", &default_grid);
  m.def("default_sweep", &default_sweep, py::arg("kind"), py::arg("seed"));
  m.def("run_sweep", &run_sweep, py::arg("scenario"), py::arg("spec"),
        py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("summarize", [](const std::vector<SweepRow>& rows) { return summarize(rows); });
  m.def("sweep_csv", [](const std::vector<SweepRow>& rows) {
    return to_csv(sweep_table(rows));
  });

  py::class_<ChannelPool>(m, "ChannelPool")
      .def_readonly("total", &ChannelPool::total)
      .def_readonly("voice_owned", &ChannelPool::voice_owned)
      .def_readonly("data_owned", &ChannelPool::data_owned)
      .def_readonly("lent_to_voice", &ChannelPool::lent_to_voice)
      .def_readonly("lent_to_data", &ChannelPool::lent_to_data)
      .def_readonly("effective_voice", &ChannelPool::effective_voice)
      .def_readonly("effective_data", &ChannelPool::effective_data)
      .def_readonly("blocked_voice", &ChannelPool::blocked_voice)
      .def_readonly("blocked_data", &ChannelPool::blocked_data)
      .def_readonly("voice_demand", &ChannelPool::voice_demand)
      .def_readonly("data_demand", &ChannelPool::data_demand);

  m.def("make_pool", &make_pool, py::arg("total"), py::arg("voice_owned"));
  m.def("rebalance", &rebalance, py::arg("pool"), py::arg("voice_demand"),
        py::arg("data_demand"));
  m.def("total_blocked", &total_blocked);
}
