// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hetsim/capacity.hpp"

namespace hetsim {

/// Count-indexed payoff tables of the symmetric cell-selection game.
/// Payoffs depend on a profile only through m, so tables over m in [0, Z]
/// describe the whole game. u0[m] is the macro payoff with m players on the
/// femtocell; it is NaN when no macro-served user exists (only at m = Z with
/// X = 0). u1[m] is the femto payoff; u1[0] describes a hypothetical first
/// joiner's share before anyone joins and is never read by the scan.
struct UtilityTable {
  std::vector<double> u0;
  std::vector<double> u1;
  int n_players = 0;
};

UtilityTable utility_table(const Drop& drop, const GameConfig& game);

/// All equilibrium femto counts, ascending: m is an equilibrium iff
///   (a) m == 0 or u1[m] >= u0[m-1]   (no femto player wants to leave), and
///   (b) m == Z or u0[m] >= u1[m+1]   (no macro player wants to join).
std::vector<int> ne_scan(const UtilityTable& table);
std::vector<int> ne_scan(const Drop& drop, const GameConfig& game);

/// Brute force check of every profile; returns all pure equilibria.
/// Guarded to Z <= 20. Intended as the test oracle for ne_scan.
std::vector<StrategyProfile> exhaustive_ne(const Drop& drop, const GameConfig& game);

/// Sequential better-reply passes in player order from the given profile
/// until no player switches. Payoffs are count-based, so every improvement
/// path is monotone in m and at most Z + 1 passes are needed; a defensive
/// error is thrown if that bound is ever exceeded.
StrategyProfile best_response(const Drop& drop, const GameConfig& game,
                              StrategyProfile start);

/// Operator revenue chi * price * price_adjustor * m with the rate constant
/// counted in Mbit/s, so the default chi contributes a factor 2.
double revenue(int m, const GameConfig& game);

struct EquilibriumReport {
  std::vector<int> ne_counts;
  int selected_m = 0;
  StrategyProfile selected_profile;
  double u0_at_ne = 0.0;
  double u1_at_ne = 0.0;
  double revenue = 0.0;
  RateBreakdown rates;
};

/// Full pipeline on one drop: payoff tables, equilibrium scan, selection by
/// best response from the all-macro profile (the smallest equilibrium count),
/// payoffs, revenue and rates at the selected canonical profile. u0_at_ne is
/// NaN when the macro side is empty at the selected count. Throws
/// std::runtime_error with a drop summary if the scan comes back empty,
/// which the better-reply argument rules out for this game class.
EquilibriumReport solve(const Drop& drop, const GameConfig& game);

/// Revenue-maximizing price over a grid: solves the game at each price and
/// returns (best price, best revenue), first maximizer on ties. The grid
/// must be non-empty with finite non-negative entries.
std::pair<double, double> optimal_price(const Drop& drop, const GameConfig& game,
                                        std::span<const double> price_grid);

}  // namespace hetsim
