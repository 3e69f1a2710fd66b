// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetsim {

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio))
    throw std::invalid_argument("linear_to_db: ratio must be positive and finite");
  return 10.0 * std::log10(ratio);
}

double path_loss_db(double distance_m, LinkKind kind, bool crosses_wall,
                    const PropagationConfig& prop, double shadowing_db) {
  if (!(distance_m > 0.0) || !std::isfinite(distance_m))
    throw std::invalid_argument("path_loss_db: distance must be positive and finite");
  const double d = std::max(distance_m, 1.0);
  const double n = kind == LinkKind::Indoor ? prop.indoor_exponent
                                            : prop.outdoor_exponent;
  double loss = prop.ref_loss_db + 10.0 * n * std::log10(d) + shadowing_db;
  if (crosses_wall) loss += prop.wall_loss_db;
  return loss;
}

LinkGain link_gain(const Position& tx, const Position& rx, bool tx_indoor,
                   bool rx_indoor, const PropagationConfig& prop,
                   double shadowing_db) {
  const double dist = std::hypot(rx.x - tx.x, rx.y - tx.y);
  const bool both_indoor = tx_indoor && rx_indoor;
  const bool wall = tx_indoor != rx_indoor;
  const LinkKind kind = both_indoor ? LinkKind::Indoor : LinkKind::OutdoorOrCrossWall;
  // Co-located stations sit inside the 1 m reference sphere.
  const double d = dist > 0.0 ? dist : 1.0;
  return LinkGain{-path_loss_db(d, kind, wall, prop, shadowing_db), wall};
}

double received_power_dbm(double tx_power_dbm, const LinkGain& gain) noexcept {
  return tx_power_dbm + gain.gain_db;
}

double noise_power_dbm(const RadioConfig& radio) {
  return radio.noise_density_dbm_per_hz + 10.0 * std::log10(radio.bandwidth_hz) +
         radio.noise_figure_db;
}

}  // namespace hetsim
