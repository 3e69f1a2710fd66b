// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace hetsim {

/// Pure strategy profile over the players of one drop, indexed by player
/// order (position in Drop::player_ids, not UE id): 0 = macrocell,
/// 1 = femtocell.
struct StrategyProfile {
  std::vector<std::uint8_t> choices;

  /// Number of players on the femtocell (m).
  int femto_count() const noexcept;

  static StrategyProfile all_macro(int n_players);

  /// Canonical profile with the first m players on the femtocell.
  static StrategyProfile first_on_femto(int n_players, int m);

  bool operator==(const StrategyProfile&) const = default;
};

}  // namespace hetsim
