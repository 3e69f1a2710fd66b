// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hetsim/channel.hpp"
#include "hetsim/model.hpp"

namespace hetsim {

/// How a UE was placed; fixed at drop generation.
enum class UeCategory { Subscriber, IndoorNonsubscriber, OutdoorNonsubscriber };

/// Access role derived from the received-power comparison. Subscribers are
/// always femto-served. Players are nonsubscribers whose femto signal beats
/// the macro signal; they choose a cell in the game. Independents stay on
/// the macrocell.
enum class UeRole { Subscriber, Player, Independent };

/// FAP transmit decision for one macro-owned slot.
enum class FapPower { TransmitFull, Mute };

struct UeRecord {
  int id = 0;
  Position position;
  UeCategory category = UeCategory::Subscriber;
  LinkGain gain_macro;
  LinkGain gain_fap;
  double rsp_macro_dbm = 0.0;
  double rsp_fap_dbm = 0.0;
  UeRole role = UeRole::Subscriber;
  bool operator==(const UeRecord&) const = default;
};

/// Largest-received-power preference: true iff the femto signal is strictly
/// stronger than the macro signal.
bool prefers_fap(const UeRecord& ue) noexcept;

/// Role from category and received powers; subscribers keep their role
/// regardless of signal strength.
UeRole classify(const UeRecord& ue) noexcept;

/// Power gate for the slot of a macro-served UE: the FAP may transmit at full
/// power iff rsp_fap + gamma + psi <= rsp_macro for that UE, i.e. the slot
/// owner keeps a protection margin over the femto interference.
FapPower fap_gate(double rsp_fap_dbm, double rsp_macro_dbm,
                  const RadioConfig& radio) noexcept;

/// One Monte Carlo realization with all derived per-drop state.
/// Id lists are ascending; player order doubles as the canonical femto fill
/// order. mute_count (D) counts independents whose slots fail the power gate;
/// players near the FAP always fail it, which the capacity formulas account
/// for separately.
struct Drop {
  std::vector<UeRecord> ues;
  std::vector<int> subscriber_ids;
  std::vector<int> player_ids;
  std::vector<int> independent_ids;
  int mute_count = 0;
  double noise_dbm = 0.0;
  ValidatedScenario scenario;

  int n_subscribers() const noexcept { return static_cast<int>(subscriber_ids.size()); }
  int n_players() const noexcept { return static_cast<int>(player_ids.size()); }
  int n_independents() const noexcept { return static_cast<int>(independent_ids.size()); }
};

/// Builds the derived state from placed UEs: ids are reassigned by index,
/// received powers are recomputed from the gains and configured powers, roles
/// are classified and the role lists, gate mute count and noise floor filled.
Drop make_drop(std::vector<UeRecord> ues, const ValidatedScenario& scenario);

}  // namespace hetsim
