// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hetsim {
namespace {

void check_load(const Drop& drop, int m) {
  if (m < 0 || m > drop.n_players())
    throw std::invalid_argument("femto load m out of [0, Z]");
}

int macro_served_count(const Drop& drop, int m) {
  return drop.n_independents() + drop.n_players() - m;
}

double femto_sinr(const Drop& drop, const UeRecord& ue) {
  const double noise_mw = db_to_linear(drop.noise_dbm);
  const double signal_mw = db_to_linear(ue.rsp_fap_dbm);
  const double interference_mw = db_to_linear(ue.rsp_macro_dbm);
  return signal_mw / (noise_mw + interference_mw);
}

double macro_snr(const Drop& drop, const UeRecord& ue) {
  return db_to_linear(ue.rsp_macro_dbm) / db_to_linear(drop.noise_dbm);
}

double price_term(const GameConfig& game) {
  return game.chi_bps * game.price * game.price_adjustor;
}

}  // namespace

std::vector<int> femto_served_ids(const Drop& drop, int m) {
  check_load(drop, m);
  std::vector<int> ids = drop.subscriber_ids;
  ids.insert(ids.end(), drop.player_ids.begin(), drop.player_ids.begin() + m);
  return ids;
}

std::vector<int> macro_served_ids(const Drop& drop, int m) {
  check_load(drop, m);
  std::vector<int> ids = drop.independent_ids;
  ids.insert(ids.end(), drop.player_ids.begin() + m, drop.player_ids.end());
  return ids;
}

double worst_femto_sinr(const Drop& drop, std::span<const int> ue_ids) {
  if (ue_ids.empty())
    throw std::invalid_argument("worst_femto_sinr: empty UE set");
  double worst = std::numeric_limits<double>::infinity();
  for (int id : ue_ids) worst = std::min(worst, femto_sinr(drop, drop.ues.at(id)));
  return worst;
}

double worst_macro_snr(const Drop& drop, std::span<const int> ue_ids) {
  if (ue_ids.empty())
    throw std::invalid_argument("worst_macro_snr: empty UE set");
  double worst = std::numeric_limits<double>::infinity();
  for (int id : ue_ids) worst = std::min(worst, macro_snr(drop, drop.ues.at(id)));
  return worst;
}

double fap_capacity_ungated(const Drop& drop, int m) {
  check_load(drop, m);
  const double sinr = worst_femto_sinr(drop, femto_served_ids(drop, m));
  return drop.scenario->radio.bandwidth_hz * std::log2(1.0 + sinr);
}

double fap_capacity(const Drop& drop, int m) {
  check_load(drop, m);
  const int slots = macro_served_count(drop, m);
  if (slots < 1)
    throw std::invalid_argument("fap_capacity: no macro-served UE owns a slot");
  const int open_slots = drop.n_independents() - drop.mute_count;
  const double sinr = worst_femto_sinr(drop, femto_served_ids(drop, m));
  return static_cast<double>(open_slots) * drop.scenario->radio.bandwidth_hz /
         static_cast<double>(slots) * std::log2(1.0 + sinr);
}

double macro_utility(const Drop& drop, int m) {
  check_load(drop, m);
  const int slots = macro_served_count(drop, m);
  if (slots < 1)
    throw std::invalid_argument("macro_utility: no macro-served UE");
  const double snr = worst_macro_snr(drop, macro_served_ids(drop, m));
  return drop.scenario->radio.bandwidth_hz / static_cast<double>(slots) *
         std::log2(1.0 + snr);
}

double femto_utility(const Drop& drop, int m, const GameConfig& game) {
  check_load(drop, m);
  // With no macro-served UE left there is no slot the gate could open, so the
  // femto side carries no capacity and only the price term remains.
  const double cap =
      macro_served_count(drop, m) >= 1 ? fap_capacity(drop, m) : 0.0;
  const double share = (1.0 - game.beta) /
                       static_cast<double>(drop.n_subscribers() + m);
  return share * cap - price_term(game);
}

double subscriber_rate(const Drop& drop, int m, const GameConfig& game) {
  check_load(drop, m);
  const double cap =
      macro_served_count(drop, m) >= 1 ? fap_capacity(drop, m) : 0.0;
  const double q = drop.n_subscribers();
  const double share = game.beta / q + (1.0 - game.beta) / (q + m);
  return share * cap;
}

RateBreakdown rate_breakdown(const Drop& drop, const StrategyProfile& profile,
                             const GameConfig& game) {
  if (static_cast<int>(profile.choices.size()) != drop.n_players())
    throw std::invalid_argument("rate_breakdown: profile size != player count");
  const int m = profile.femto_count();
  const int slots = macro_served_count(drop, m);
  const double cap = slots >= 1 ? fap_capacity(drop, m) : 0.0;
  const double w = drop.scenario->radio.bandwidth_hz;
  const double noise_mw = db_to_linear(drop.noise_dbm);

  RateBreakdown out;
  out.per_ue_bps.assign(drop.ues.size(), 0.0);

  const double sub_rate = subscriber_rate(drop, m, game);
  const double femto_player_rate =
      (1.0 - game.beta) / static_cast<double>(drop.n_subscribers() + m) * cap;
  for (int id : drop.subscriber_ids) out.per_ue_bps[id] = sub_rate;

  // Macro-served UEs each own one slot of the round-robin frame; femto
  // interference hits only slots whose owner lets the gate open.
  const double slot_share = slots >= 1 ? 1.0 / static_cast<double>(slots) : 0.0;
  for (std::size_t i = 0; i < profile.choices.size(); ++i) {
    const UeRecord& ue = drop.ues[drop.player_ids[i]];
    if (profile.choices[i]) {
      out.per_ue_bps[ue.id] = femto_player_rate;
    } else {
      // A player's own slot is always gate-muted, so no femto interference.
      out.per_ue_bps[ue.id] =
          w * slot_share * std::log2(1.0 + macro_snr(drop, ue));
    }
  }
  for (int id : drop.independent_ids) {
    const UeRecord& ue = drop.ues[id];
    const bool gate_open =
        fap_gate(ue.rsp_fap_dbm, ue.rsp_macro_dbm, drop.scenario->radio) ==
        FapPower::TransmitFull;
    const double interference_mw = gate_open ? db_to_linear(ue.rsp_fap_dbm) : 0.0;
    const double sinr =
        db_to_linear(ue.rsp_macro_dbm) / (noise_mw + interference_mw);
    out.per_ue_bps[id] = w * slot_share * std::log2(1.0 + sinr);
  }

  auto mean_over = [&](const std::vector<int>& ids) {
    if (ids.empty()) return 0.0;
    double sum = 0.0;
    for (int id : ids) sum += out.per_ue_bps[id];
    return sum / static_cast<double>(ids.size());
  };
  out.per_subscriber_bps = mean_over(drop.subscriber_ids);
  out.per_player_bps = mean_over(drop.player_ids);
  out.per_independent_bps = mean_over(drop.independent_ids);
  if (!drop.ues.empty()) {
    double sum = 0.0;
    for (double r : out.per_ue_bps) sum += r;
    out.system_bps = sum / static_cast<double>(drop.ues.size());
  }
  return out;
}

}  // namespace hetsim
