// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "hetsim/access.hpp"
#include "hetsim/strategy.hpp"

namespace hetsim {

/// Femto-served UE ids at femto load m: all subscribers plus the first m
/// players in canonical order. Requires 0 <= m <= Z.
std::vector<int> femto_served_ids(const Drop& drop, int m);

/// Macro-served UE ids at femto load m: independents plus the players beyond
/// the first m. Requires 0 <= m <= Z.
std::vector<int> macro_served_ids(const Drop& drop, int m);

/// Worst femto downlink SINR over a UE id set, linear. The macro station
/// interferes at full power; the set must be non-empty.
double worst_femto_sinr(const Drop& drop, std::span<const int> ue_ids);

/// Worst macro downlink SNR over a UE id set, linear; the set must be
/// non-empty.
double worst_macro_snr(const Drop& drop, std::span<const int> ue_ids);

/// Femto cell capacity if the FAP transmitted in every slot: W log2(1 + S)
/// with S the worst femto SINR at load m.
double fap_capacity_ungated(const Drop& drop, int m);

/// Femto cell capacity under slot sharing and the power gate. Each of the
/// X + Z - m macro-served UEs owns one slot per round-robin frame; the FAP
/// transmits only in the X - D slots whose owners pass the gate (players on
/// the macrocell never do), so
///   C = (X - D) W / (X + Z - m) log2(1 + S).
/// Requires at least one macro-served UE (X + Z - m >= 1).
double fap_capacity(const Drop& drop, int m);

/// Per-player payoff on the macrocell at femto load m: the macro slot share
/// evaluated at the worst macro-served user. Strictly increasing in m.
/// Requires at least one macro-served UE.
double macro_utility(const Drop& drop, int m);

/// Per-player payoff on the femtocell at femto load m: the open share of the
/// femto capacity split over Q + m femto users, minus the price term
/// chi * price * price_adjustor (price counted per Mbit of the rate
/// constant). Defined for any m; when no macro-served UE remains the gated
/// capacity is zero, so the payoff is just the negated price term.
double femto_utility(const Drop& drop, int m, const GameConfig& game);

/// Subscriber rate at femto load m: the reserved share beta/Q plus the open
/// share (1 - beta)/(Q + m), both of the gated femto capacity.
double subscriber_rate(const Drop& drop, int m, const GameConfig& game);

/// Per-UE downlink rates under one strategy profile.
struct RateBreakdown {
  double per_subscriber_bps = 0.0;
  double per_player_bps = 0.0;
  double per_independent_bps = 0.0;
  double system_bps = 0.0;
  std::vector<double> per_ue_bps;
  bool operator==(const RateBreakdown&) const = default;
};

/// Rates for every UE under the given profile. Femto-served users split the
/// gated capacity by the hybrid sharing rule; each macro-served UE gets its
/// own-link rate on its 1/(X + Z - m) slot share, with femto interference in
/// the slots where the gate lets the FAP transmit. The role averages skip
/// empty roles (0 is reported). system_bps averages all UEs.
RateBreakdown rate_breakdown(const Drop& drop, const StrategyProfile& profile,
                             const GameConfig& game);

}  // namespace hetsim
