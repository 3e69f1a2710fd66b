// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>

namespace hetsim {

/// One splitmix64 step: advances the state and returns the next output.
std::uint64_t splitmix64_next(std::uint64_t& state) noexcept;

/// xoshiro256++ generator seeded through splitmix64 state expansion.
/// Every simulation draw goes through this class so that results are
/// bit-reproducible across platforms and standard-library versions.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept;

  /// Normal draw via Box-Muller. Consumes exactly two uniforms per call and
  /// keeps no cached state, so the draw count per call is fixed.
  double gaussian(double mean, double sigma) noexcept;

 private:
  std::uint64_t s_[4];
};

/// Collapses (seed, part_0, part_1, ...) into one stream key. Order-sensitive
/// and avalanching, so nearby tuples give unrelated streams.
std::uint64_t derive_key(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> parts) noexcept;

/// Generator for one purpose tuple, e.g. (drop, purpose, category, index).
/// Draws under one tuple never disturb draws under any other tuple, which
/// keeps drops comparable when populations or sweep values change.
Xoshiro256pp make_stream(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> parts) noexcept;

}  // namespace hetsim
