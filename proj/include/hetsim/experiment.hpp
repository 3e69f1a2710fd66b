// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hetsim/game.hpp"
#include "hetsim/table.hpp"

namespace hetsim {

enum class SweepKind { Beta, Distance, Price };

struct SweepSpec {
  SweepKind kind = SweepKind::Beta;
  std::vector<double> grid;
  int n_drops = 1000;
  std::uint64_t seed = 42;
};

/// Default grids: beta 0..1 step 0.1, distance 100..900 m step 100,
/// price 0..8 step 0.5.
std::vector<double> default_grid(SweepKind kind);

SweepSpec default_sweep(SweepKind kind, std::uint64_t seed);

/// Per-grid-value averages over all drops. Role averages are means of the
/// per-drop role means; drops with an empty role contribute 0 for that role.
struct SweepRow {
  double grid_value = 0.0;
  double avg_player_bps = 0.0;
  double avg_subscriber_bps = 0.0;
  double avg_independent_bps = 0.0;
  double avg_system_bps = 0.0;
  double avg_m = 0.0;
  double avg_revenue = 0.0;
  /// Fraction of drops with more than one equilibrium count.
  double ne_multiplicity_rate = 0.0;

  std::array<double, 8> as_array() const noexcept;
  bool operator==(const SweepRow&) const = default;
};

inline constexpr std::array<const char*, 8> kSweepColumns = {
    "grid_value",          "avg_player_bps", "avg_subscriber_bps",
    "avg_independent_bps", "avg_system_bps", "avg_m",
    "avg_revenue",         "ne_multiplicity_rate"};

/// One Monte Carlo drop: subscriber and indoor-nonsubscriber placement in the
/// room, outdoor placement in the macro disc outside the room, one frozen
/// shadowing draw per (UE, station) link, link budget, classification. Every
/// draw comes from a substream keyed by (seed, drop, purpose, category,
/// index[, station]), so a UE's randomness does not depend on the other UEs
/// or on any swept parameter: sweeps share common random numbers.
Drop generate_drop(const ValidatedScenario& scenario, std::uint64_t seed,
                   std::uint64_t drop_index);

/// Sweep-specific checks on top of scenario validation: non-empty strictly
/// increasing grid, value ranges per kind (beta in [0,1], distance in
/// (0, macro_radius], price >= 0), n_drops >= 1. Throws ValidationError.
void validate_sweep(const SweepSpec& spec, const ValidatedScenario& scenario);

/// Runs the sweep: for every grid value, n_drops drops are solved and
/// averaged. Beta and price sweeps reuse one drop set since drops do not
/// depend on the game config; distance sweeps regenerate geometry per value
/// under common random numbers. threads = 0 means hardware concurrency; the
/// output is bit-identical for every thread count.
std::vector<SweepRow> run_sweep(const ValidatedScenario& scenario,
                                const SweepSpec& spec, int threads = 0);

/// Digest of a sweep: argmax grid values of the subscriber-rate and revenue
/// columns (first maximizer on ties) and per-column min/max.
struct SweepSummary {
  double subscriber_peak_grid = 0.0;
  double revenue_peak_grid = 0.0;
  std::array<double, 8> col_min{};
  std::array<double, 8> col_max{};
};

SweepSummary summarize(std::span<const SweepRow> rows);

/// Rows as an OutputTable with the fixed sweep header, ready for to_csv or
/// to_json. Metadata is the caller's business.
OutputTable sweep_table(std::span<const SweepRow> rows);

}  // namespace hetsim
