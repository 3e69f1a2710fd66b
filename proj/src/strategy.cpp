// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetsim {

int StrategyProfile::femto_count() const noexcept {
  return static_cast<int>(std::count(choices.begin(), choices.end(), 1));
}

StrategyProfile StrategyProfile::all_macro(int n_players) {
  if (n_players < 0)
    throw std::invalid_argument("StrategyProfile: negative player count");
  return StrategyProfile{std::vector<std::uint8_t>(n_players, 0)};
}

StrategyProfile StrategyProfile::first_on_femto(int n_players, int m) {
  if (n_players < 0 || m < 0 || m > n_players)
    throw std::invalid_argument("StrategyProfile: femto count out of range");
  StrategyProfile p = all_macro(n_players);
  std::fill(p.choices.begin(), p.choices.begin() + m, std::uint8_t{1});
  return p;
}

}  // namespace hetsim
