// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/game.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hetsim {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Equilibrium conditions over the count tables. NaN u0 entries only occur
// where the corresponding side is empty, and those comparisons are never
// reached: u0[m] is read only when some player sits on the macro side.
bool no_femto_leaver(const UtilityTable& t, int m) {
  return m == 0 || t.u1[m] >= t.u0[m - 1];
}

bool no_macro_joiner(const UtilityTable& t, int m) {
  return m == t.n_players || t.u0[m] >= t.u1[m + 1];
}

}  // namespace

UtilityTable utility_table(const Drop& drop, const GameConfig& game) {
  const int z = drop.n_players();
  const int x = drop.n_independents();
  UtilityTable t{std::vector<double>(z + 1, kNan), std::vector<double>(z + 1, kNan), z};
  for (int m = 0; m <= z; ++m) {
    if (x + z - m >= 1) t.u0[m] = macro_utility(drop, m);
    t.u1[m] = femto_utility(drop, m, game);
  }
  return t;
}

std::vector<int> ne_scan(const UtilityTable& table) {
  std::vector<int> out;
  for (int m = 0; m <= table.n_players; ++m)
    if (no_femto_leaver(table, m) && no_macro_joiner(table, m)) out.push_back(m);
  return out;
}

std::vector<int> ne_scan(const Drop& drop, const GameConfig& game) {
  return ne_scan(utility_table(drop, game));
}

std::vector<StrategyProfile> exhaustive_ne(const Drop& drop, const GameConfig& game) {
  const int z = drop.n_players();
  if (z > 20)
    throw std::invalid_argument("exhaustive_ne: more than 20 players");
  const UtilityTable t = utility_table(drop, game);
  std::vector<StrategyProfile> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << z); ++bits) {
    StrategyProfile p = StrategyProfile::all_macro(z);
    int m = 0;
    for (int i = 0; i < z; ++i)
      if (bits >> i & 1) {
        p.choices[i] = 1;
        ++m;
      }
    bool stable = true;
    for (int i = 0; i < z && stable; ++i) {
      // One player flips; everyone else holds, so the count moves by one.
      const double now = p.choices[i] ? t.u1[m] : t.u0[m];
      const double then = p.choices[i] ? t.u0[m - 1] : t.u1[m + 1];
      if (then > now) stable = false;
    }
    if (stable) out.push_back(std::move(p));
  }
  return out;
}

StrategyProfile best_response(const Drop& drop, const GameConfig& game,
                              StrategyProfile start) {
  const int z = drop.n_players();
  if (static_cast<int>(start.choices.size()) != z)
    throw std::invalid_argument("best_response: profile size != player count");
  const UtilityTable t = utility_table(drop, game);
  int m = start.femto_count();
  // Improvement steps all move m the same way, so z + 1 passes suffice; the
  // throw below is unreachable unless that argument is broken.
  for (int pass = 0; pass <= z + 1; ++pass) {
    bool moved = false;
    for (int i = 0; i < z; ++i) {
      if (start.choices[i]) {
        if (t.u0[m - 1] > t.u1[m]) {
          start.choices[i] = 0;
          --m;
          moved = true;
        }
      } else if (t.u1[m + 1] > t.u0[m]) {
        start.choices[i] = 1;
        ++m;
        moved = true;
      }
    }
    if (!moved) return start;
  }
  throw std::runtime_error("best_response: no fixed point reached");
}

double revenue(int m, const GameConfig& game) {
  if (m < 0) throw std::invalid_argument("revenue: negative femto count");
  return game.chi_bps / 1e6 * game.price * game.price_adjustor *
         static_cast<double>(m);
}

EquilibriumReport solve(const Drop& drop, const GameConfig& game) {
  const int z = drop.n_players();
  const UtilityTable t = utility_table(drop, game);
  EquilibriumReport report;
  report.ne_counts = ne_scan(t);
  if (report.ne_counts.empty()) {
    std::ostringstream msg;
    msg << "solve: empty equilibrium scan (Q=" << drop.n_subscribers()
        << " X=" << drop.n_independents() << " Z=" << z
        << " D=" << drop.mute_count << " beta=" << game.beta
        << " price=" << game.price << ")";
    throw std::runtime_error(msg.str());
  }
  // Climb from the all-macro profile: join while the next femto seat strictly
  // beats staying. Stops at the smallest equilibrium count.
  int m = 0;
  while (m < z && t.u1[m + 1] > t.u0[m]) ++m;
  report.selected_m = m;
  report.selected_profile = StrategyProfile::first_on_femto(z, m);
  report.u0_at_ne = t.u0[m];
  report.u1_at_ne = t.u1[m];
  report.revenue = revenue(m, game);
  report.rates = rate_breakdown(drop, report.selected_profile, game);
  return report;
}

std::pair<double, double> optimal_price(const Drop& drop, const GameConfig& game,
                                        std::span<const double> price_grid) {
  if (price_grid.empty())
    throw std::invalid_argument("optimal_price: empty grid");
  for (double p : price_grid)
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("optimal_price: prices must be finite and non-negative");
  double best_price = price_grid[0];
  double best_revenue = -std::numeric_limits<double>::infinity();
  for (double p : price_grid) {
    GameConfig g = game;
    g.price = p;
    const EquilibriumReport rep = solve(drop, g);
    if (rep.revenue > best_revenue) {
      best_revenue = rep.revenue;
      best_price = p;
    }
  }
  return {best_price, best_revenue};
}

}  // namespace hetsim
