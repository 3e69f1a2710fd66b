// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <limits>

#include "hetsim/errors.hpp"
#include "hetsim/model.hpp"

using namespace hetsim;

namespace {

/// Field path reported for a config expected to fail validation.
std::string failing_field(const ScenarioConfig& cfg) {
  try {
    validate(cfg);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("baseline scenario carries the documented defaults") {
  const ScenarioConfig cfg = default_scenario();
  CHECK_EQ(cfg.radio.bandwidth_hz, 6e6);
  CHECK_EQ(cfg.radio.n_subchannels, 30);
  CHECK_EQ(cfg.radio.noise_density_dbm_per_hz, -180.0);
  CHECK_EQ(cfg.radio.noise_figure_db, 10.0);
  CHECK_EQ(cfg.radio.p_max_macro_dbm, 40.0);
  CHECK_EQ(cfg.radio.p_max_fap_dbm, 10.0);
  CHECK_EQ(cfg.radio.gamma_db, 10.0);
  CHECK_EQ(cfg.radio.psi_db, 0.0);
  CHECK_EQ(cfg.propagation.ref_loss_db, 10.0);
  CHECK_EQ(cfg.propagation.indoor_exponent, 2.0);
  CHECK_EQ(cfg.propagation.outdoor_exponent, 3.5);
  CHECK_EQ(cfg.propagation.wall_loss_db, 15.0);
  CHECK_EQ(cfg.propagation.shadowing_sigma_db, 8.0);
  CHECK_EQ(cfg.geometry.macro_radius_m, 1000.0);
  CHECK_EQ(cfg.geometry.mbs_fap_distance_m, 500.0);
  CHECK_EQ(cfg.geometry.room_side_m, 20.0);
  CHECK_EQ(cfg.geometry.n_subscribers, 6);
  CHECK_EQ(cfg.geometry.n_indoor_nonsubscribers, 10);
  CHECK_EQ(cfg.geometry.n_outdoor_nonsubscribers, 12);
  CHECK_EQ(cfg.game.beta, 0.5);
  CHECK_EQ(cfg.game.price, 0.0);
  CHECK_EQ(cfg.game.chi_bps, 2e6);
  CHECK_EQ(cfg.game.price_adjustor, 1.0);
}

TEST_CASE("validation accepts the baseline and is idempotent") {
  const ValidatedScenario v = validate(default_scenario());
  CHECK_EQ(v.config(), default_scenario());
  CHECK_EQ(validate(v.config()), v);
}

TEST_CASE("beta bounds are inclusive") {
  ScenarioConfig cfg = default_scenario();
  cfg.game.beta = 0.0;
  CHECK_NOTHROW(validate(cfg));
  cfg.game.beta = 1.0;
  CHECK_NOTHROW(validate(cfg));
  cfg.game.beta = 1.5;
  CHECK_EQ(failing_field(cfg), "game.beta");
  cfg.game.beta = -0.1;
  CHECK_EQ(failing_field(cfg), "game.beta");
}

TEST_CASE("violations are reported with the offending field path") {
  ScenarioConfig cfg = default_scenario();
  cfg.radio.bandwidth_hz = 0.0;
  CHECK_EQ(failing_field(cfg), "radio.bandwidth_hz");

  cfg = default_scenario();
  cfg.radio.bandwidth_hz = std::numeric_limits<double>::quiet_NaN();
  CHECK_EQ(failing_field(cfg), "radio.bandwidth_hz");

  cfg = default_scenario();
  cfg.radio.gamma_db = -1.0;
  CHECK_EQ(failing_field(cfg), "radio.gamma_db");

  cfg = default_scenario();
  cfg.propagation.shadowing_sigma_db = -8.0;
  CHECK_EQ(failing_field(cfg), "propagation.shadowing_sigma_db");

  cfg = default_scenario();
  cfg.geometry.n_subscribers = 0;
  CHECK_EQ(failing_field(cfg), "geometry.n_subscribers");

  cfg = default_scenario();
  cfg.geometry.mbs_fap_distance_m = 1200.0;
  CHECK_EQ(failing_field(cfg), "geometry.mbs_fap_distance_m");

  cfg = default_scenario();
  cfg.geometry.mbs_fap_distance_m = -5.0;
  CHECK_EQ(failing_field(cfg), "geometry.mbs_fap_distance_m");

  cfg = default_scenario();
  cfg.game.chi_bps = 0.0;
  CHECK_EQ(failing_field(cfg), "game.chi_bps");

  cfg = default_scenario();
  cfg.game.price = -2.0;
  CHECK_EQ(failing_field(cfg), "game.price");
}

TEST_CASE("the first violation in declaration order wins") {
  ScenarioConfig cfg = default_scenario();
  cfg.radio.bandwidth_hz = -1.0;
  cfg.game.beta = 7.0;
  CHECK_EQ(failing_field(cfg), "radio.bandwidth_hz");
}

TEST_CASE("error text names the field and the reason") {
  ScenarioConfig cfg = default_scenario();
  cfg.game.beta = 2.0;
  try {
    validate(cfg);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK_NE(what.find("game.beta"), std::string::npos);
    CHECK_NE(what.find("[0, 1]"), std::string::npos);
  }
}

}  // TEST_SUITE
