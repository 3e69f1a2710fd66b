// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hetsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Position&) const = default;
};

/// Radio-layer parameters shared by both base stations.
struct RadioConfig {
  double bandwidth_hz = 6e6;
  int n_subchannels = 30;
  double noise_density_dbm_per_hz = -180.0;
  double noise_figure_db = 10.0;
  double p_max_macro_dbm = 40.0;
  double p_max_fap_dbm = 10.0;
  /// Interference margin of the femto power gate, in dB.
  double gamma_db = 10.0;
  /// Additional gate adjustment margin, in dB.
  double psi_db = 0.0;
  bool operator==(const RadioConfig&) const = default;
};

/// Log-distance path-loss model parameters.
struct PropagationConfig {
  /// Reference loss at 1 m, in dB.
  double ref_loss_db = 10.0;
  double indoor_exponent = 2.0;
  double outdoor_exponent = 3.5;
  double wall_loss_db = 15.0;
  double shadowing_sigma_db = 8.0;
  bool operator==(const PropagationConfig&) const = default;
};

/// Cell layout and population sizes. The macro station sits at the origin;
/// the femto access point sits at (mbs_fap_distance_m, 0) inside a square
/// room of side room_side_m.
struct GeometryConfig {
  double macro_radius_m = 1000.0;
  double mbs_fap_distance_m = 500.0;
  double room_side_m = 20.0;
  int n_subscribers = 6;
  int n_indoor_nonsubscribers = 10;
  int n_outdoor_nonsubscribers = 12;
  bool operator==(const GeometryConfig&) const = default;
};

/// Access-control and pricing knobs of the cell-selection game.
struct GameConfig {
  /// Fraction of femto resources reserved for subscribers; 1 = closed access,
  /// 0 = open access.
  double beta = 0.5;
  /// Unit price charged to nonsubscribers served by the femtocell.
  double price = 0.0;
  /// Rate constant multiplying the price, in bit/s.
  double chi_bps = 2e6;
  /// Operator-tuned price adjustment factor.
  double price_adjustor = 1.0;
  bool operator==(const GameConfig&) const = default;
};

struct ScenarioConfig {
  RadioConfig radio;
  PropagationConfig propagation;
  GeometryConfig geometry;
  GameConfig game;
  bool operator==(const ScenarioConfig&) const = default;
};

/// Baseline scenario: one macrocell of radius 1 km, one femtocell at 500 m
/// with 6 subscribers, 10 indoor and 12 outdoor nonsubscribers.
ScenarioConfig default_scenario();

/// A ScenarioConfig that has passed validate(). Construction is only possible
/// through validate(), so functions taking a ValidatedScenario can rely on
/// every range check having been performed.
class ValidatedScenario {
 public:
  const ScenarioConfig& config() const noexcept { return cfg_; }
  const ScenarioConfig* operator->() const noexcept { return &cfg_; }
  bool operator==(const ValidatedScenario&) const = default;

  friend ValidatedScenario validate(const ScenarioConfig& cfg);

 private:
  explicit ValidatedScenario(const ScenarioConfig& cfg) : cfg_(cfg) {}
  ScenarioConfig cfg_;
};

/// Checks every field for range and finiteness; throws ValidationError naming
/// the first offending field in declaration order. Idempotent: a validated
/// config revalidates to an equal value.
ValidatedScenario validate(const ScenarioConfig& cfg);

}  // namespace hetsim
