// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hetsim/model.hpp"

namespace hetsim {

/// Selects the path-loss exponent: Indoor when both endpoints share the room,
/// OutdoorOrCrossWall for every other link.
enum class LinkKind { Indoor, OutdoorOrCrossWall };

/// One directed radio link. gain_db is the negated total path loss including
/// shadowing and any wall penalty, so received power = tx power + gain_db.
struct LinkGain {
  double gain_db = 0.0;
  bool crosses_wall = false;
  bool operator==(const LinkGain&) const = default;
};

/// 10^(db/10). Also converts dBm to mW.
double db_to_linear(double db) noexcept;

/// 10 log10(ratio). Throws std::invalid_argument unless ratio > 0 and finite.
double linear_to_db(double ratio);

/// Log-distance path loss: ref_loss_db + 10 n log10(d) + shadowing + wall.
/// Distances below the 1 m reference are clamped to 1 m; d must be positive
/// and finite or std::invalid_argument is thrown. shadowing_db is a frozen
/// per-link draw supplied by the caller, not sampled here.
double path_loss_db(double distance_m, LinkKind kind, bool crosses_wall,
                    const PropagationConfig& prop, double shadowing_db);

/// Gain between two stations. The link kind and wall crossing follow from the
/// endpoint environments: both indoor means the indoor exponent and no wall;
/// any outdoor endpoint means the outdoor exponent, with the wall penalty iff
/// exactly one endpoint is indoor. Symmetric in (tx, rx).
LinkGain link_gain(const Position& tx, const Position& rx, bool tx_indoor,
                   bool rx_indoor, const PropagationConfig& prop,
                   double shadowing_db);

double received_power_dbm(double tx_power_dbm, const LinkGain& gain) noexcept;

/// Thermal noise over the full system bandwidth plus the receiver noise
/// figure, in dBm.
double noise_power_dbm(const RadioConfig& radio);

}  // namespace hetsim
