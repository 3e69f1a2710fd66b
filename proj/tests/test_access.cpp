// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstddef>
#include <vector>

#include "hetsim/access.hpp"
#include "hetsim/channel.hpp"
#include "hetsim/model.hpp"
#include "test_support.hpp"

using namespace hetsim;
using hetsim::test::drop_from_rsps;
using hetsim::test::planted_ue;

TEST_SUITE("access") {

TEST_CASE("cell preference needs a strictly stronger femto signal") {
  UeRecord ue;
  ue.rsp_macro_dbm = -60.0;
  ue.rsp_fap_dbm = -60.0;
  CHECK_FALSE(prefers_fap(ue));
  ue.rsp_fap_dbm = -59.999;
  CHECK(prefers_fap(ue));
  ue.rsp_fap_dbm = -80.0;
  CHECK_FALSE(prefers_fap(ue));
}

TEST_CASE("subscribers keep their role regardless of signal strength") {
  UeRecord ue;
  ue.category = UeCategory::Subscriber;
  ue.rsp_macro_dbm = -50.0;
  ue.rsp_fap_dbm = -90.0;
  CHECK_EQ(classify(ue), UeRole::Subscriber);
  ue.rsp_fap_dbm = -40.0;
  CHECK_EQ(classify(ue), UeRole::Subscriber);
}

TEST_CASE("nonsubscribers split into players and independents") {
  UeRecord ue;
  ue.category = UeCategory::IndoorNonsubscriber;
  ue.rsp_macro_dbm = -70.0;
  ue.rsp_fap_dbm = -50.0;
  CHECK_EQ(classify(ue), UeRole::Player);
  ue.category = UeCategory::OutdoorNonsubscriber;
  CHECK_EQ(classify(ue), UeRole::Player);
  ue.rsp_fap_dbm = -70.0;  // tie goes to the macrocell
  CHECK_EQ(classify(ue), UeRole::Independent);
  ue.rsp_fap_dbm = -90.0;
  CHECK_EQ(classify(ue), UeRole::Independent);
}

TEST_CASE("power gate holds the protection margin inclusively") {
  const RadioConfig radio;  // gamma 10 dB, psi 0 dB
  // Femto signal 10 dB below the slot owner's macro signal: exactly on the
  // margin, the FAP may still transmit.
  CHECK_EQ(fap_gate(-80.0, -70.0, radio), FapPower::TransmitFull);
  CHECK_EQ(fap_gate(-79.9, -70.0, radio), FapPower::Mute);
  CHECK_EQ(fap_gate(-120.0, -70.0, radio), FapPower::TransmitFull);
  CHECK_EQ(fap_gate(-60.0, -70.0, radio), FapPower::Mute);
}

TEST_CASE("gate margin widens with the adjustment term") {
  RadioConfig radio;
  radio.psi_db = 5.0;
  CHECK_EQ(fap_gate(-85.0, -70.0, radio), FapPower::TransmitFull);
  CHECK_EQ(fap_gate(-80.0, -70.0, radio), FapPower::Mute);
}

TEST_CASE("drops partition UEs into ascending role lists") {
  const Drop drop = drop_from_rsps({
      {UeCategory::Subscriber, -60.0, -50.0},
      {UeCategory::IndoorNonsubscriber, -70.0, -50.0},
      {UeCategory::OutdoorNonsubscriber, -60.0, -60.0},
      {UeCategory::OutdoorNonsubscriber, -60.0, -90.0},
      {UeCategory::Subscriber, -50.0, -80.0},
  });
  CHECK_EQ(drop.subscriber_ids, std::vector<int>{0, 4});
  CHECK_EQ(drop.player_ids, std::vector<int>{1});
  CHECK_EQ(drop.independent_ids, std::vector<int>{2, 3});
  CHECK_EQ(drop.n_subscribers(), 2);
  CHECK_EQ(drop.n_players(), 1);
  CHECK_EQ(drop.n_independents(), 2);
  CHECK_EQ(drop.ues.size(), std::size_t{5});
}

TEST_CASE("mute count covers exactly the gated independents") {
  const Drop drop = drop_from_rsps({
      // Independent on the margin boundary: gate stays open.
      {UeCategory::OutdoorNonsubscriber, -60.0, -70.0},
      // Independent 5 dB inside the margin: slot is muted.
      {UeCategory::OutdoorNonsubscriber, -60.0, -65.0},
      // Player would fail the gate too, but players are not counted here.
      {UeCategory::IndoorNonsubscriber, -70.0, -50.0},
      // Subscribers never contribute either.
      {UeCategory::Subscriber, -60.0, -55.0},
  });
  CHECK_EQ(drop.mute_count, 1);
}

TEST_CASE("derived fields are recomputed from the gains") {
  const ScenarioConfig cfg = default_scenario();
  UeRecord ue = planted_ue(UeCategory::IndoorNonsubscriber, -70.0, -50.0, cfg);
  // Prefill stale values that make_drop must overwrite.
  ue.id = 99;
  ue.rsp_macro_dbm = 123.0;
  ue.rsp_fap_dbm = 456.0;
  ue.role = UeRole::Subscriber;
  const Drop drop = make_drop({ue, ue}, validate(cfg));
  CHECK_EQ(drop.ues[0].id, 0);
  CHECK_EQ(drop.ues[1].id, 1);
  CHECK_EQ(drop.ues[0].rsp_macro_dbm, doctest::Approx(-70.0));
  CHECK_EQ(drop.ues[0].rsp_fap_dbm, doctest::Approx(-50.0));
  CHECK_EQ(drop.ues[0].role, UeRole::Player);
  CHECK_EQ(drop.noise_dbm, noise_power_dbm(cfg.radio));
}

TEST_CASE("a drop with no nonsubscribers has empty game-side lists") {
  const Drop drop = drop_from_rsps({
      {UeCategory::Subscriber, -60.0, -50.0},
  });
  CHECK_EQ(drop.n_players(), 0);
  CHECK_EQ(drop.n_independents(), 0);
  CHECK_EQ(drop.mute_count, 0);
}

}  // TEST_SUITE
