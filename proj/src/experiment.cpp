// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hetsim/errors.hpp"
#include "hetsim/rng.hpp"

namespace hetsim {
namespace {

// Substream purpose and category codes; frozen, part of the output identity.
constexpr std::uint64_t kPurposePosition = 1;
constexpr std::uint64_t kPurposeShadowing = 2;
constexpr std::uint64_t kCatSubscriber = 0;
constexpr std::uint64_t kCatIndoor = 1;
constexpr std::uint64_t kCatOutdoor = 2;
constexpr std::uint64_t kStationMacro = 0;
constexpr std::uint64_t kStationFap = 1;

/// Runs fn(0..n-1) on the given number of worker threads (0 = hardware).
/// Work items are claimed atomically; outputs must be written to slot i so
/// the result does not depend on the schedule.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(n, 1));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        try {
          for (int i; (i = next.fetch_add(1)) < n;) fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

ValidatedScenario scenario_at(const ValidatedScenario& base, SweepKind kind,
                              double grid_value) {
  ScenarioConfig cfg = base.config();
  switch (kind) {
    case SweepKind::Beta:
      cfg.game.beta = grid_value;
      break;
    case SweepKind::Distance:
      cfg.geometry.mbs_fap_distance_m = grid_value;
      break;
    case SweepKind::Price:
      cfg.game.price = grid_value;
      break;
  }
  return validate(cfg);
}

const char* kind_field(SweepKind kind) {
  switch (kind) {
    case SweepKind::Beta:
      return "sweep.grid (beta)";
    case SweepKind::Distance:
      return "sweep.grid (distance)";
    case SweepKind::Price:
      return "sweep.grid (price)";
  }
  return "sweep.grid";
}

}  // namespace

std::array<double, 8> SweepRow::as_array() const noexcept {
  return {grid_value,     avg_player_bps, avg_subscriber_bps,
          avg_independent_bps, avg_system_bps, avg_m,
          avg_revenue,    ne_multiplicity_rate};
}

std::vector<double> default_grid(SweepKind kind) {
  std::vector<double> grid;
  switch (kind) {
    case SweepKind::Beta:
      for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
      break;
    case SweepKind::Distance:
      for (int i = 1; i <= 9; ++i) grid.push_back(100.0 * i);
      break;
    case SweepKind::Price:
      for (int i = 0; i <= 16; ++i) grid.push_back(i / 2.0);
      break;
  }
  return grid;
}

SweepSpec default_sweep(SweepKind kind, std::uint64_t seed) {
  return SweepSpec{kind, default_grid(kind), 1000, seed};
}

Drop generate_drop(const ValidatedScenario& scenario, std::uint64_t seed,
                   std::uint64_t drop_index) {
  const GeometryConfig& geo = scenario->geometry;
  const PropagationConfig& prop = scenario->propagation;
  const Position mbs{0.0, 0.0};
  const Position fap{geo.mbs_fap_distance_m, 0.0};
  const double half_side = geo.room_side_m / 2.0;
  const auto in_room = [&](const Position& p) {
    return std::abs(p.x - fap.x) <= half_side && std::abs(p.y - fap.y) <= half_side;
  };

  struct Placed {
    UeCategory category;
    std::uint64_t cat_code;
    std::uint64_t index;
    Position position;
  };
  std::vector<Placed> placed;
  placed.reserve(static_cast<std::size_t>(geo.n_subscribers) +
                 geo.n_indoor_nonsubscribers + geo.n_outdoor_nonsubscribers);

  const auto place_in_room = [&](UeCategory cat, std::uint64_t code, int count) {
    for (int i = 0; i < count; ++i) {
      auto rng = make_stream(
          seed, {drop_index, kPurposePosition, code, static_cast<std::uint64_t>(i)});
      const Position p{fap.x + (rng.uniform01() - 0.5) * geo.room_side_m,
                       fap.y + (rng.uniform01() - 0.5) * geo.room_side_m};
      placed.push_back({cat, code, static_cast<std::uint64_t>(i), p});
    }
  };
  place_in_room(UeCategory::Subscriber, kCatSubscriber, geo.n_subscribers);
  place_in_room(UeCategory::IndoorNonsubscriber, kCatIndoor,
                geo.n_indoor_nonsubscribers);
  for (int i = 0; i < geo.n_outdoor_nonsubscribers; ++i) {
    auto rng = make_stream(seed, {drop_index, kPurposePosition, kCatOutdoor,
                                  static_cast<std::uint64_t>(i)});
    // Uniform over the macro disc, rejecting the femto room.
    Position p;
    do {
      const double r = geo.macro_radius_m * std::sqrt(rng.uniform01());
      const double angle = 2.0 * std::numbers::pi * rng.uniform01();
      p = {r * std::cos(angle), r * std::sin(angle)};
    } while (in_room(p));
    placed.push_back({UeCategory::OutdoorNonsubscriber, kCatOutdoor,
                      static_cast<std::uint64_t>(i), p});
  }

  const bool mbs_indoor = in_room(mbs);
  const double sigma = prop.shadowing_sigma_db;
  std::vector<UeRecord> ues;
  ues.reserve(placed.size());
  for (const Placed& pl : placed) {
    const bool ue_indoor = pl.category != UeCategory::OutdoorNonsubscriber;
    const double shadow_macro =
        make_stream(seed, {drop_index, kPurposeShadowing, pl.cat_code, pl.index,
                           kStationMacro})
            .gaussian(0.0, sigma);
    const double shadow_fap =
        make_stream(seed, {drop_index, kPurposeShadowing, pl.cat_code, pl.index,
                           kStationFap})
            .gaussian(0.0, sigma);
    UeRecord ue;
    ue.position = pl.position;
    ue.category = pl.category;
    ue.gain_macro = link_gain(mbs, pl.position, mbs_indoor, ue_indoor, prop,
                              shadow_macro);
    ue.gain_fap = link_gain(fap, pl.position, true, ue_indoor, prop, shadow_fap);
    ues.push_back(ue);
  }
  return make_drop(std::move(ues), scenario);
}

void validate_sweep(const SweepSpec& spec, const ValidatedScenario& scenario) {
  if (spec.n_drops < 1)
    throw ValidationError("sweep.n_drops", "must be at least 1");
  if (spec.grid.empty())
    throw ValidationError("sweep.grid", "must be non-empty");
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    if (!std::isfinite(spec.grid[i]))
      throw ValidationError("sweep.grid", "entries must be finite");
    if (i > 0 && spec.grid[i] <= spec.grid[i - 1])
      throw ValidationError("sweep.grid", "entries must be strictly increasing");
  }
  switch (spec.kind) {
    case SweepKind::Beta:
      if (spec.grid.front() < 0.0 || spec.grid.back() > 1.0)
        throw ValidationError(kind_field(spec.kind), "beta values must lie in [0, 1]");
      break;
    case SweepKind::Distance:
      if (spec.grid.front() <= 0.0)
        throw ValidationError(kind_field(spec.kind), "distances must be positive");
      if (spec.grid.back() > scenario->geometry.macro_radius_m)
        throw ValidationError(kind_field(spec.kind),
                              "distances must not exceed macro_radius_m");
      break;
    case SweepKind::Price:
      if (spec.grid.front() < 0.0)
        throw ValidationError(kind_field(spec.kind), "prices must be non-negative");
      break;
  }
}

std::vector<SweepRow> run_sweep(const ValidatedScenario& scenario,
                                const SweepSpec& spec, int threads) {
  validate_sweep(spec, scenario);
  const int n = spec.n_drops;
  const bool regenerate = spec.kind == SweepKind::Distance;

  std::vector<Drop> drops;
  const auto generate_all = [&](const ValidatedScenario& sc) {
    std::vector<Drop> out(static_cast<std::size_t>(n),
                          generate_drop(sc, spec.seed, 0));
    parallel_for(n - 1, threads, [&](int i) {
      out[i + 1] = generate_drop(sc, spec.seed, static_cast<std::uint64_t>(i + 1));
    });
    return out;
  };
  // Drops depend only on radio, propagation and geometry, so beta and price
  // sweeps share one drop set; distance sweeps regenerate per grid value and
  // rely on per-UE substreams for common random numbers.
  if (!regenerate) drops = generate_all(scenario);

  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double grid_value : spec.grid) {
    const ValidatedScenario sc = scenario_at(scenario, spec.kind, grid_value);
    if (regenerate) drops = generate_all(sc);
    const GameConfig game = sc->game;

    std::vector<EquilibriumReport> reports(n);
    parallel_for(n, threads, [&](int i) { reports[i] = solve(drops[i], game); });

    SweepRow row;
    row.grid_value = grid_value;
    for (const EquilibriumReport& rep : reports) {
      row.avg_player_bps += rep.rates.per_player_bps;
      row.avg_subscriber_bps += rep.rates.per_subscriber_bps;
      row.avg_independent_bps += rep.rates.per_independent_bps;
      row.avg_system_bps += rep.rates.system_bps;
      row.avg_m += rep.selected_m;
      row.avg_revenue += rep.revenue;
      row.ne_multiplicity_rate += rep.ne_counts.size() > 1 ? 1.0 : 0.0;
    }
    row.avg_player_bps /= n;
    row.avg_subscriber_bps /= n;
    row.avg_independent_bps /= n;
    row.avg_system_bps /= n;
    row.avg_m /= n;
    row.avg_revenue /= n;
    row.ne_multiplicity_rate /= n;
    rows.push_back(row);
  }
  return rows;
}

SweepSummary summarize(std::span<const SweepRow> rows) {
  if (rows.empty()) throw std::invalid_argument("summarize: no rows");
  SweepSummary s;
  s.col_min.fill(std::numeric_limits<double>::infinity());
  s.col_max.fill(-std::numeric_limits<double>::infinity());
  double best_sub = -std::numeric_limits<double>::infinity();
  double best_rev = -std::numeric_limits<double>::infinity();
  for (const SweepRow& row : rows) {
    const std::array<double, 8> a = row.as_array();
    for (std::size_t c = 0; c < a.size(); ++c) {
      s.col_min[c] = std::min(s.col_min[c], a[c]);
      s.col_max[c] = std::max(s.col_max[c], a[c]);
    }
    if (row.avg_subscriber_bps > best_sub) {
      best_sub = row.avg_subscriber_bps;
      s.subscriber_peak_grid = row.grid_value;
    }
    if (row.avg_revenue > best_rev) {
      best_rev = row.avg_revenue;
      s.revenue_peak_grid = row.grid_value;
    }
  }
  return s;
}

OutputTable sweep_table(std::span<const SweepRow> rows) {
  OutputTable table;
  table.header.assign(kSweepColumns.begin(), kSweepColumns.end());
  table.rows.reserve(rows.size());
  for (const SweepRow& row : rows) {
    const std::array<double, 8> a = row.as_array();
    table.rows.emplace_back(a.begin(), a.end());
  }
  return table;
}

}  // namespace hetsim
