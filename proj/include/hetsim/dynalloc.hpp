// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hetsim {

/// Channel pool shared by a voice partition and a data partition. Each side
/// owns a fixed share; a side with spare owned channels lends them to the
/// other for the current demand step. Loans are recomputed from scratch at
/// every rebalance, so a pool state is a pure function of the last demands.
struct ChannelPool {
  int total = 30;
  int voice_owned = 15;
  int data_owned = 15;
  int lent_to_voice = 0;
  int lent_to_data = 0;
  int effective_voice = 15;
  int effective_data = 15;
  int blocked_voice = 0;
  int blocked_data = 0;
  int voice_demand = 0;
  int data_demand = 0;
  bool operator==(const ChannelPool&) const = default;
};

/// Fresh pool with no demand. Requires total >= 1 and
/// 0 <= voice_owned <= total.
ChannelPool make_pool(int total, int voice_owned);

/// Applies one demand step. Outstanding loans are recalled first, then the
/// side with a deficit borrows from the other side's surplus. At most one
/// loan direction is nonzero; effective_voice + effective_data == total
/// always holds, and blocked counts are the unmet parts of each demand.
/// Demands must be non-negative.
ChannelPool rebalance(const ChannelPool& pool, int voice_demand, int data_demand);

int total_blocked(const ChannelPool& pool) noexcept;

}  // namespace hetsim
