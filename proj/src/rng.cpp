// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace hetsim {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) noexcept {
  std::uint64_t st = seed;
  for (auto& word : s_) word = splitmix64_next(st);
  // xoshiro forbids the all-zero state; splitmix expansion cannot produce it
  // from any seed, but guard anyway.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

std::uint64_t Xoshiro256pp::next() noexcept {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::uniform(double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform01();
}

double Xoshiro256pp::gaussian(double mean, double sigma) noexcept {
  // 1 - u keeps the log argument in (0, 1], away from log(0).
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_key(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t state = seed;
  std::uint64_t key = splitmix64_next(state);
  for (std::uint64_t part : parts) {
    state = key ^ part;
    key = splitmix64_next(state);
  }
  return key;
}

Xoshiro256pp make_stream(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> parts) noexcept {
  return Xoshiro256pp(derive_key(seed, parts));
}

}  // namespace hetsim
