// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/scenario_io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "hetsim/errors.hpp"
#include "hetsim/table.hpp"

namespace hetsim {
namespace {

using nlohmann::json;

/// Strict section reader: every key must be known and carry the right type.
class SectionReader {
 public:
  SectionReader(const json& section, std::string prefix)
      : section_(section), prefix_(std::move(prefix)) {
    if (!section.is_object())
      throw ValidationError(prefix_, "must be a JSON object");
  }

  void read(const char* key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number())
        throw ValidationError(prefix_ + "." + key, "must be a number");
      out = v->get<double>();
    }
  }

  void read(const char* key, int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer())
        throw ValidationError(prefix_ + "." + key, "must be an integer");
      out = v->get<int>();
    }
  }

  /// Call after all read() calls: any key never looked up is unknown.
  void finish() const {
    for (const auto& [key, value] : section_.items())
      if (!seen_.contains(key))
        throw ValidationError(prefix_ + "." + key, "unknown field");
  }

 private:
  const json* find(const char* key) {
    seen_.insert(key);
    const auto it = section_.find(key);
    return it == section_.end() ? nullptr : &*it;
  }

  const json& section_;
  std::string prefix_;
  std::set<std::string> seen_;
};

}  // namespace

json scenario_to_json(const ScenarioConfig& cfg) {
  return json{
      {"radio",
       {{"bandwidth_hz", cfg.radio.bandwidth_hz},
        {"n_subchannels", cfg.radio.n_subchannels},
        {"noise_density_dbm_per_hz", cfg.radio.noise_density_dbm_per_hz},
        {"noise_figure_db", cfg.radio.noise_figure_db},
        {"p_max_macro_dbm", cfg.radio.p_max_macro_dbm},
        {"p_max_fap_dbm", cfg.radio.p_max_fap_dbm},
        {"gamma_db", cfg.radio.gamma_db},
        {"psi_db", cfg.radio.psi_db}}},
      {"propagation",
       {{"ref_loss_db", cfg.propagation.ref_loss_db},
        {"indoor_exponent", cfg.propagation.indoor_exponent},
        {"outdoor_exponent", cfg.propagation.outdoor_exponent},
        {"wall_loss_db", cfg.propagation.wall_loss_db},
        {"shadowing_sigma_db", cfg.propagation.shadowing_sigma_db}}},
      {"geometry",
       {{"macro_radius_m", cfg.geometry.macro_radius_m},
        {"mbs_fap_distance_m", cfg.geometry.mbs_fap_distance_m},
        {"room_side_m", cfg.geometry.room_side_m},
        {"n_subscribers", cfg.geometry.n_subscribers},
        {"n_indoor_nonsubscribers", cfg.geometry.n_indoor_nonsubscribers},
        {"n_outdoor_nonsubscribers", cfg.geometry.n_outdoor_nonsubscribers}}},
      {"game",
       {{"beta", cfg.game.beta},
        {"price", cfg.game.price},
        {"chi_bps", cfg.game.chi_bps},
        {"price_adjustor", cfg.game.price_adjustor}}}};
}

ScenarioConfig scenario_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("scenario", "must be a JSON object");
  static const json empty = json::object();
  const auto section = [&](const char* name) -> const json& {
    const auto it = j.find(name);
    return it == j.end() ? empty : *it;
  };
  for (const auto& [key, value] : j.items())
    if (key != "radio" && key != "propagation" && key != "geometry" && key != "game")
      throw ValidationError(key, "unknown section");

  ScenarioConfig cfg = default_scenario();

  SectionReader radio(section("radio"), "radio");
  radio.read("bandwidth_hz", cfg.radio.bandwidth_hz);
  radio.read("n_subchannels", cfg.radio.n_subchannels);
  radio.read("noise_density_dbm_per_hz", cfg.radio.noise_density_dbm_per_hz);
  radio.read("noise_figure_db", cfg.radio.noise_figure_db);
  radio.read("p_max_macro_dbm", cfg.radio.p_max_macro_dbm);
  radio.read("p_max_fap_dbm", cfg.radio.p_max_fap_dbm);
  radio.read("gamma_db", cfg.radio.gamma_db);
  radio.read("psi_db", cfg.radio.psi_db);
  radio.finish();

  SectionReader prop(section("propagation"), "propagation");
  prop.read("ref_loss_db", cfg.propagation.ref_loss_db);
  prop.read("indoor_exponent", cfg.propagation.indoor_exponent);
  prop.read("outdoor_exponent", cfg.propagation.outdoor_exponent);
  prop.read("wall_loss_db", cfg.propagation.wall_loss_db);
  prop.read("shadowing_sigma_db", cfg.propagation.shadowing_sigma_db);
  prop.finish();

  SectionReader geo(section("geometry"), "geometry");
  geo.read("macro_radius_m", cfg.geometry.macro_radius_m);
  geo.read("mbs_fap_distance_m", cfg.geometry.mbs_fap_distance_m);
  geo.read("room_side_m", cfg.geometry.room_side_m);
  geo.read("n_subscribers", cfg.geometry.n_subscribers);
  geo.read("n_indoor_nonsubscribers", cfg.geometry.n_indoor_nonsubscribers);
  geo.read("n_outdoor_nonsubscribers", cfg.geometry.n_outdoor_nonsubscribers);
  geo.finish();

  SectionReader game(section("game"), "game");
  game.read("beta", cfg.game.beta);
  game.read("price", cfg.game.price);
  game.read("chi_bps", cfg.game.chi_bps);
  game.read("price_adjustor", cfg.game.price_adjustor);
  game.finish();

  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path, "cannot open scenario file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(path, std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

std::string scenario_hash_hex(const ScenarioConfig& cfg) {
  // json objects dump with sorted keys, which fixes the canonical form.
  const std::string canonical = scenario_to_json(cfg).dump();
  const std::uint64_t h = fnv1a64(canonical);
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace hetsim
