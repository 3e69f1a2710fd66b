// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/dynalloc.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetsim {

ChannelPool make_pool(int total, int voice_owned) {
  if (total < 1) throw std::invalid_argument("make_pool: total must be >= 1");
  if (voice_owned < 0 || voice_owned > total)
    throw std::invalid_argument("make_pool: voice_owned out of [0, total]");
  ChannelPool pool;
  pool.total = total;
  pool.voice_owned = voice_owned;
  pool.data_owned = total - voice_owned;
  pool.lent_to_voice = pool.lent_to_data = 0;
  pool.effective_voice = voice_owned;
  pool.effective_data = pool.data_owned;
  pool.blocked_voice = pool.blocked_data = 0;
  pool.voice_demand = pool.data_demand = 0;
  return pool;
}

ChannelPool rebalance(const ChannelPool& pool, int voice_demand, int data_demand) {
  if (voice_demand < 0 || data_demand < 0)
    throw std::invalid_argument("rebalance: demands must be non-negative");
  ChannelPool next = pool;
  next.voice_demand = voice_demand;
  next.data_demand = data_demand;
  // Recalling every outstanding loan first makes the new loans a pure
  // function of the demands, so repeated identical steps are idempotent.
  const int voice_deficit = std::max(0, voice_demand - pool.voice_owned);
  const int data_deficit = std::max(0, data_demand - pool.data_owned);
  const int voice_surplus = std::max(0, pool.voice_owned - voice_demand);
  const int data_surplus = std::max(0, pool.data_owned - data_demand);
  // At most one side can be in deficit after recall, so loans never cross.
  next.lent_to_voice = std::min(voice_deficit, data_surplus);
  next.lent_to_data = std::min(data_deficit, voice_surplus);
  next.effective_voice = pool.voice_owned + next.lent_to_voice - next.lent_to_data;
  next.effective_data = pool.data_owned + next.lent_to_data - next.lent_to_voice;
  next.blocked_voice = std::max(0, voice_demand - next.effective_voice);
  next.blocked_data = std::max(0, data_demand - next.effective_data);
  return next;
}

int total_blocked(const ChannelPool& pool) noexcept {
  return pool.blocked_voice + pool.blocked_data;
}

}  // namespace hetsim
