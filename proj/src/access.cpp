// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/access.hpp"

#include <utility>

namespace hetsim {

bool prefers_fap(const UeRecord& ue) noexcept {
  return ue.rsp_fap_dbm > ue.rsp_macro_dbm;
}

UeRole classify(const UeRecord& ue) noexcept {
  if (ue.category == UeCategory::Subscriber) return UeRole::Subscriber;
  return prefers_fap(ue) ? UeRole::Player : UeRole::Independent;
}

FapPower fap_gate(double rsp_fap_dbm, double rsp_macro_dbm,
                  const RadioConfig& radio) noexcept {
  return rsp_fap_dbm + radio.gamma_db + radio.psi_db <= rsp_macro_dbm
             ? FapPower::TransmitFull
             : FapPower::Mute;
}

Drop make_drop(std::vector<UeRecord> ues, const ValidatedScenario& scenario) {
  Drop drop{std::move(ues), {}, {}, {}, 0, 0.0, scenario};
  const RadioConfig& radio = scenario->radio;
  for (std::size_t i = 0; i < drop.ues.size(); ++i) {
    UeRecord& ue = drop.ues[i];
    ue.id = static_cast<int>(i);
    ue.rsp_macro_dbm = received_power_dbm(radio.p_max_macro_dbm, ue.gain_macro);
    ue.rsp_fap_dbm = received_power_dbm(radio.p_max_fap_dbm, ue.gain_fap);
    ue.role = classify(ue);
    switch (ue.role) {
      case UeRole::Subscriber:
        drop.subscriber_ids.push_back(ue.id);
        break;
      case UeRole::Player:
        drop.player_ids.push_back(ue.id);
        break;
      case UeRole::Independent:
        drop.independent_ids.push_back(ue.id);
        if (fap_gate(ue.rsp_fap_dbm, ue.rsp_macro_dbm, radio) == FapPower::Mute)
          ++drop.mute_count;
        break;
    }
  }
  drop.noise_dbm = noise_power_dbm(radio);
  return drop;
}

}  // namespace hetsim
