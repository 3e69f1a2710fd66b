// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/model.hpp"

#include <cmath>
#include <string>

#include "hetsim/errors.hpp"

namespace hetsim {
namespace {

void require(bool ok, const char* field, const char* reason) {
  if (!ok) throw ValidationError(field, reason);
}

void require_finite(double v, const char* field) {
  require(std::isfinite(v), field, "must be finite");
}

}  // namespace

ScenarioConfig default_scenario() { return ScenarioConfig{}; }

ValidatedScenario validate(const ScenarioConfig& cfg) {
  const RadioConfig& r = cfg.radio;
  require_finite(r.bandwidth_hz, "radio.bandwidth_hz");
  require(r.bandwidth_hz > 0.0, "radio.bandwidth_hz", "must be positive");
  require(r.n_subchannels >= 1, "radio.n_subchannels", "must be at least 1");
  require_finite(r.noise_density_dbm_per_hz, "radio.noise_density_dbm_per_hz");
  require_finite(r.noise_figure_db, "radio.noise_figure_db");
  require(r.noise_figure_db >= 0.0, "radio.noise_figure_db", "must be non-negative");
  require_finite(r.p_max_macro_dbm, "radio.p_max_macro_dbm");
  require_finite(r.p_max_fap_dbm, "radio.p_max_fap_dbm");
  require_finite(r.gamma_db, "radio.gamma_db");
  require(r.gamma_db >= 0.0, "radio.gamma_db", "must be non-negative");
  require_finite(r.psi_db, "radio.psi_db");
  require(r.psi_db >= 0.0, "radio.psi_db", "must be non-negative");

  const PropagationConfig& p = cfg.propagation;
  require_finite(p.ref_loss_db, "propagation.ref_loss_db");
  require(p.ref_loss_db >= 0.0, "propagation.ref_loss_db", "must be non-negative");
  require_finite(p.indoor_exponent, "propagation.indoor_exponent");
  require(p.indoor_exponent > 0.0, "propagation.indoor_exponent", "must be positive");
  require_finite(p.outdoor_exponent, "propagation.outdoor_exponent");
  require(p.outdoor_exponent > 0.0, "propagation.outdoor_exponent", "must be positive");
  require_finite(p.wall_loss_db, "propagation.wall_loss_db");
  require(p.wall_loss_db >= 0.0, "propagation.wall_loss_db", "must be non-negative");
  require_finite(p.shadowing_sigma_db, "propagation.shadowing_sigma_db");
  require(p.shadowing_sigma_db >= 0.0, "propagation.shadowing_sigma_db",
          "must be non-negative");

  const GeometryConfig& g = cfg.geometry;
  require_finite(g.macro_radius_m, "geometry.macro_radius_m");
  require(g.macro_radius_m > 0.0, "geometry.macro_radius_m", "must be positive");
  require_finite(g.mbs_fap_distance_m, "geometry.mbs_fap_distance_m");
  require(g.mbs_fap_distance_m >= 0.0, "geometry.mbs_fap_distance_m",
          "must be non-negative");
  require(g.mbs_fap_distance_m <= g.macro_radius_m, "geometry.mbs_fap_distance_m",
          "must not exceed macro_radius_m");
  require_finite(g.room_side_m, "geometry.room_side_m");
  require(g.room_side_m > 0.0, "geometry.room_side_m", "must be positive");
  require(g.n_subscribers >= 1, "geometry.n_subscribers",
          "the femtocell needs at least one subscriber");
  require(g.n_indoor_nonsubscribers >= 0, "geometry.n_indoor_nonsubscribers",
          "must be non-negative");
  require(g.n_outdoor_nonsubscribers >= 0, "geometry.n_outdoor_nonsubscribers",
          "must be non-negative");

  const GameConfig& gm = cfg.game;
  require_finite(gm.beta, "game.beta");
  require(gm.beta >= 0.0 && gm.beta <= 1.0, "game.beta", "must lie in [0, 1]");
  require_finite(gm.price, "game.price");
  require(gm.price >= 0.0, "game.price", "must be non-negative");
  require_finite(gm.chi_bps, "game.chi_bps");
  require(gm.chi_bps > 0.0, "game.chi_bps", "must be positive");
  require_finite(gm.price_adjustor, "game.price_adjustor");
  require(gm.price_adjustor >= 0.0, "game.price_adjustor", "must be non-negative");

  return ValidatedScenario(cfg);
}

}  // namespace hetsim
