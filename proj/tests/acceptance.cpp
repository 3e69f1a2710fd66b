// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks, one test case per shipped guarantee. Every case prints a
// [PASS]/[FAIL] verdict line with its evidence so the ctest log reads as a
// checklist.
#include <doctest.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hetsim/capacity.hpp"
#include "hetsim/channel.hpp"
#include "hetsim/dynalloc.hpp"
#include "hetsim/experiment.hpp"
#include "hetsim/game.hpp"
#include "hetsim/model.hpp"
#include "hetsim/rng.hpp"
#include "test_support.hpp"

using namespace hetsim;
using hetsim::test::drop_from_rsps;

namespace {

const char* verdict(bool ok) { return ok ? "[PASS]" : "[FAIL]"; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Drop> make_drops(const ValidatedScenario& sc, int n,
                             std::uint64_t seed) {
  std::vector<Drop> drops;
  drops.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    drops.push_back(generate_drop(sc, seed, static_cast<std::uint64_t>(i)));
  return drops;
}

bool close_rel(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

std::string cli_binary() {
  const char* bin = std::getenv("HETSIM_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "HETSIM_CLI_BIN must point at the command line binary");
  return bin;
}

int run_cli(const std::string& bin, const std::string& args,
            const std::string& capture_path = "/dev/null") {
  const std::string cmd =
      "'" + bin + "' " + args + " > '" + capture_path + "' 2>&1";
  return std::system(cmd.c_str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("01_equilibrium_scan_matches_brute_force") {
  Stopwatch timer;
  // Small nonsubscriber population so brute force over all 2^Z profiles stays
  // cheap (Z <= 12).
  ScenarioConfig cfg = default_scenario();
  cfg.geometry.n_indoor_nonsubscribers = 8;
  cfg.geometry.n_outdoor_nonsubscribers = 4;
  const ValidatedScenario sc = validate(cfg);

  Xoshiro256pp meta(20260817);
  int mismatches = 0;
  int max_players = 0;
  for (int i = 0; i < 200; ++i) {
    const Drop drop = generate_drop(sc, 123, static_cast<std::uint64_t>(i));
    max_players = std::max(max_players, drop.n_players());
    GameConfig game = cfg.game;
    game.beta = meta.uniform(0.0, 1.0);
    game.price = meta.uniform(0.0, 8.0);
    const std::vector<int> scan = ne_scan(drop, game);
    std::set<int> brute;
    for (const StrategyProfile& p : exhaustive_ne(drop, game))
      brute.insert(p.femto_count());
    if (std::vector<int>(brute.begin(), brute.end()) != scan) ++mismatches;
  }
  const double elapsed = timer.seconds();
  const bool ok = mismatches == 0 && max_players <= 12 && elapsed < 30.0;
  std::cout << verdict(ok)
            << " 01 scan vs brute force: 200/200 drops compared, mismatches="
            << mismatches << ", max players=" << max_players << ", "
            << elapsed << " s (limit 30)\n";
  CHECK_EQ(mismatches, 0);
  CHECK_LE(max_players, 12);
  CHECK_LT(elapsed, 30.0);
}

TEST_CASE("02_equilibrium_always_exists") {
  Stopwatch timer;
  const ValidatedScenario sc = validate(default_scenario());
  const std::vector<Drop> drops = make_drops(sc, 1000, 42);
  int empty_scans = 0;
  long long combos = 0;
  for (int bi = 0; bi <= 10; ++bi) {
    for (double price : {0.0, 2.0, 4.0, 6.0, 8.0}) {
      GameConfig game = sc->game;
      game.beta = bi / 10.0;
      game.price = price;
      for (const Drop& drop : drops) {
        ++combos;
        if (ne_scan(drop, game).empty()) ++empty_scans;
      }
    }
  }
  const double elapsed = timer.seconds();
  const bool ok = empty_scans == 0 && combos == 55000 && elapsed < 120.0;
  std::cout << verdict(ok) << " 02 equilibrium existence: " << combos
            << " drop/beta/price combinations, empty scans=" << empty_scans
            << ", " << elapsed << " s (limit 120)\n";
  CHECK_EQ(empty_scans, 0);
  CHECK_EQ(combos, 55000);
  CHECK_LT(elapsed, 120.0);
}

TEST_CASE("03_closed_access_priced_out") {
  const ValidatedScenario sc = validate(default_scenario());
  const std::vector<Drop> drops = make_drops(sc, 1000, 42);
  int violations = 0;
  for (double price : {0.5, 3.0, 8.0}) {
    GameConfig game = sc->game;
    game.beta = 1.0;
    game.price = price;
    for (const Drop& drop : drops) {
      const EquilibriumReport rep = solve(drop, game);
      if (rep.selected_m != 0 || rep.revenue != 0.0) ++violations;
    }
  }
  const bool ok = violations == 0;
  std::cout << verdict(ok)
            << " 03 closed access with a positive price: 3000 solves, "
               "violations of m*=0 and revenue=0: "
            << violations << "\n";
  CHECK_EQ(violations, 0);
}

TEST_CASE("04_open_beats_closed_system_capacity") {
  const ValidatedScenario sc = validate(default_scenario());
  const SweepSpec spec{SweepKind::Beta, {0.0, 1.0}, 1000, 42};
  const std::vector<SweepRow> rows = run_sweep(sc, spec);
  const double open = rows[0].avg_system_bps;
  const double closed = rows[1].avg_system_bps;
  const bool ok = open > closed;
  std::cout << verdict(ok) << " 04 system capacity, 1000 drops: open(beta=0)="
            << open << " bit/s vs closed(beta=1)=" << closed
            << " bit/s (strictly greater required)\n";
  CHECK_GT(open, closed);
}

TEST_CASE("05_subscriber_rate_peaks_mid_beta") {
  const ValidatedScenario sc = validate(default_scenario());
  const SweepSpec spec = default_sweep(SweepKind::Beta, 42);
  const std::vector<SweepRow> rows = run_sweep(sc, spec);
  const SweepSummary digest = summarize(rows);
  const double peak = digest.subscriber_peak_grid;
  std::cout << "      05 avg_subscriber_bps over beta:";
  for (const SweepRow& row : rows)
    std::cout << ' ' << row.grid_value << ':' << row.avg_subscriber_bps;
  std::cout << '\n';
  const bool ok = peak >= 0.5 && peak <= 0.9;
  std::cout << verdict(ok)
            << " 05 subscriber-rate peak at beta=" << peak
            << " (interior band [0.5, 0.9] required)\n";
  CHECK_GE(peak, 0.5);
  CHECK_LE(peak, 0.9);
  CHECK_GT(peak, 0.0);
  CHECK_LT(peak, 1.0);
}

TEST_CASE("06_revenue_peaks_at_interior_price") {
  const ValidatedScenario sc = validate(default_scenario());
  const SweepSpec spec = default_sweep(SweepKind::Price, 42);
  const std::vector<SweepRow> rows = run_sweep(sc, spec);
  const SweepSummary digest = summarize(rows);
  const double peak = digest.revenue_peak_grid;
  std::cout << "      06 avg_revenue over price:";
  for (const SweepRow& row : rows)
    std::cout << ' ' << row.grid_value << ':' << row.avg_revenue;
  std::cout << '\n';
  const bool ok =
      rows.front().avg_revenue == 0.0 && peak > 0.0 && peak < 8.0;
  std::cout << verdict(ok) << " 06 revenue: 0 at price 0 (got "
            << rows.front().avg_revenue << "), peak at interior price "
            << peak << "\n";
  CHECK_EQ(rows.front().avg_revenue, 0.0);
  CHECK_GT(peak, 0.0);
  CHECK_LT(peak, 8.0);
}

TEST_CASE("07_distance_sweep_access_mode_order") {
  const std::array<double, 3> betas{1.0, 0.5, 0.0};  // closed, hybrid, open
  std::array<std::vector<SweepRow>, 3> results;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    ScenarioConfig cfg = default_scenario();
    cfg.game.beta = betas[i];
    results[i] = run_sweep(validate(cfg), default_sweep(SweepKind::Distance, 42));
  }
  const std::vector<SweepRow>& closed = results[0];
  const std::vector<SweepRow>& hybrid = results[1];
  const std::vector<SweepRow>& open = results[2];
  const std::size_t n = closed.size();
  int sub_ok = 0;
  int sys_ok = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool sub = closed[i].avg_subscriber_bps >= hybrid[i].avg_subscriber_bps &&
                     hybrid[i].avg_subscriber_bps >= open[i].avg_subscriber_bps;
    const bool sys = open[i].avg_system_bps >= hybrid[i].avg_system_bps &&
                     hybrid[i].avg_system_bps >= closed[i].avg_system_bps;
    sub_ok += sub;
    sys_ok += sys;
    std::cout << "      07 d=" << closed[i].grid_value
              << " subscriber c/h/o=" << closed[i].avg_subscriber_bps << '/'
              << hybrid[i].avg_subscriber_bps << '/'
              << open[i].avg_subscriber_bps << (sub ? " ok" : " OUT OF ORDER")
              << " | system o/h/c=" << open[i].avg_system_bps << '/'
              << hybrid[i].avg_system_bps << '/' << closed[i].avg_system_bps
              << (sys ? " ok" : " OUT OF ORDER") << '\n';
  }
  const int need = static_cast<int>(std::ceil(0.8 * static_cast<double>(n)));
  std::cout << verdict(sys_ok >= need) << " 07 system ordering open>=hybrid>=closed: "
            << sys_ok << "/" << n << " grid points (need >= " << need << ")\n";
  std::cout << verdict(sub_ok >= need)
            << " 07 subscriber ordering closed>=hybrid>=open: " << sub_ok << "/"
            << n << " grid points (need >= " << need << ")\n";
  CHECK_GE(sys_ok, need);
  CHECK_GE(sub_ok, need);
}

TEST_CASE("08_price_monotone_and_macro_utility_increasing") {
  const ValidatedScenario sc = validate(default_scenario());
  int u0_violations = 0;
  int monotone_violations = 0;
  for (int i = 0; i < 100; ++i) {
    const Drop drop = generate_drop(sc, 42, static_cast<std::uint64_t>(i));
    const UtilityTable t = utility_table(drop, sc->game);
    for (int m = 0; m + 1 <= t.n_players; ++m) {
      if (std::isnan(t.u0[m + 1])) break;
      if (!(t.u0[m + 1] > t.u0[m])) ++u0_violations;
    }
    int prev_m = drop.n_players() + 1;
    for (int price = 0; price <= 8; ++price) {
      GameConfig game = sc->game;
      game.price = price;
      const int m = solve(drop, game).selected_m;
      if (price > 0 && m > prev_m) ++monotone_violations;
      prev_m = m;
    }
  }
  const bool ok = u0_violations == 0 && monotone_violations == 0;
  std::cout << verdict(ok)
            << " 08 over 100 drops: macro payoff strictly increasing in m "
               "(violations="
            << u0_violations << "), m*(price) non-increasing (violations="
            << monotone_violations << ")\n";
  CHECK_EQ(u0_violations, 0);
  CHECK_EQ(monotone_violations, 0);
}

TEST_CASE("09_capacity_identities_and_rate_oracle") {
  const ValidatedScenario sc = validate(default_scenario());

  // (a) The gated capacity is the ungated one scaled by open slots over the
  // frame length.
  int identity_failures = 0;
  for (int i = 0; i < 50; ++i) {
    const Drop drop = generate_drop(sc, 42, static_cast<std::uint64_t>(i));
    const int x = drop.n_independents();
    const int z = drop.n_players();
    for (int m = 0; m <= z; ++m) {
      if (x + z - m < 1) continue;
      const double expected = fap_capacity_ungated(drop, m) *
                              static_cast<double>(x - drop.mute_count) /
                              static_cast<double>(x + z - m);
      if (!close_rel(fap_capacity(drop, m), expected, 1e-12))
        ++identity_failures;
    }
  }

  // (b) Doubling the bandwidth at a fixed noise floor doubles every rate.
  ScenarioConfig wide_cfg = default_scenario();
  wide_cfg.radio.bandwidth_hz *= 2.0;
  const ValidatedScenario wide_sc = validate(wide_cfg);
  int linearity_failures = 0;
  for (int i = 0; i < 10; ++i) {
    const Drop base = generate_drop(sc, 42, static_cast<std::uint64_t>(i));
    Drop wide = generate_drop(wide_sc, 42, static_cast<std::uint64_t>(i));
    wide.noise_dbm = base.noise_dbm;
    const int z = base.n_players();
    const StrategyProfile profile = StrategyProfile::first_on_femto(z, z / 2);
    const RateBreakdown rb = rate_breakdown(base, profile, sc->game);
    const RateBreakdown rw = rate_breakdown(wide, profile, sc->game);
    for (std::size_t k = 0; k < rb.per_ue_bps.size(); ++k)
      if (!close_rel(rw.per_ue_bps[k], 2.0 * rb.per_ue_bps[k], 1e-12))
        ++linearity_failures;
    for (int m = 0; m <= z; ++m) {
      if (base.n_independents() + z - m < 1) continue;
      if (!close_rel(fap_capacity(wide, m), 2.0 * fap_capacity(base, m), 1e-12))
        ++linearity_failures;
    }
  }

  // (c) Four hand-computed UEs: subscriber at SINR 1, player at macro SNR 3
  // and femto SINR 2, a gate-open independent at SINR 20/11, a gate-muted
  // independent at SNR 3.
  const double noise = noise_power_dbm(default_scenario().radio);
  const auto over = [&](double lin) { return noise + 10.0 * std::log10(lin); };
  const Drop oracle = drop_from_rsps({
      {UeCategory::Subscriber, over(1.0), over(2.0)},
      {UeCategory::IndoorNonsubscriber, over(3.0), over(8.0)},
      {UeCategory::OutdoorNonsubscriber, over(2.0), noise - 10.0},
      {UeCategory::OutdoorNonsubscriber, over(3.0), noise + 2.0},
  });
  REQUIRE_EQ(oracle.n_players(), 1);
  REQUIRE_EQ(oracle.n_independents(), 2);
  REQUIRE_EQ(oracle.mute_count, 1);
  GameConfig half;
  half.beta = 0.5;
  int oracle_failures = 0;
  const auto expect = [&](double got, double want) {
    if (!close_rel(got, want, 1e-9)) ++oracle_failures;
  };
  // Player on the femtocell: frame length 2, C = 3e6.
  const RateBreakdown joined =
      rate_breakdown(oracle, StrategyProfile::first_on_femto(1, 1), half);
  expect(joined.per_ue_bps[0], 2.25e6);
  expect(joined.per_ue_bps[1], 0.75e6);
  expect(joined.per_ue_bps[2], 3e6 * std::log2(31.0 / 11.0));
  expect(joined.per_ue_bps[3], 6e6);
  // Player on the macrocell: frame length 3, C = 2e6.
  const RateBreakdown apart =
      rate_breakdown(oracle, StrategyProfile::all_macro(1), half);
  expect(apart.per_ue_bps[0], 2e6);
  expect(apart.per_ue_bps[1], 4e6);
  expect(apart.per_ue_bps[2], 2e6 * std::log2(31.0 / 11.0));
  expect(apart.per_ue_bps[3], 4e6);

  const bool ok =
      identity_failures == 0 && linearity_failures == 0 && oracle_failures == 0;
  std::cout << verdict(ok)
            << " 09 capacity identity failures=" << identity_failures
            << " (tol 1e-12), bandwidth-linearity failures="
            << linearity_failures
            << " (tol 1e-12), hand-oracle failures=" << oracle_failures
            << " (tol 1e-9)\n";
  CHECK_EQ(identity_failures, 0);
  CHECK_EQ(linearity_failures, 0);
  CHECK_EQ(oracle_failures, 0);
}

TEST_CASE("10_channel_pool_conservation") {
  Xoshiro256pp meta(7);
  ChannelPool pool = make_pool(30, 15);
  int conservation_violations = 0;
  int blocking_violations = 0;
  for (int step = 0; step < 10000; ++step) {
    const int voice = static_cast<int>(meta.uniform01() * 61.0);
    const int data = static_cast<int>(meta.uniform01() * 61.0);
    pool = rebalance(pool, voice, data);
    if (pool.effective_voice + pool.effective_data != 30)
      ++conservation_violations;
    if (total_blocked(pool) != std::max(0, voice + data - 30))
      ++blocking_violations;
  }
  const bool ok = conservation_violations == 0 && blocking_violations == 0;
  std::cout << verdict(ok)
            << " 10 channel pool, 10000 random demand steps: conservation "
               "violations="
            << conservation_violations
            << ", blocking-identity violations=" << blocking_violations << "\n";
  CHECK_EQ(conservation_violations, 0);
  CHECK_EQ(blocking_violations, 0);
}

TEST_CASE("11_cli_byte_identical_output") {
  const std::string bin = cli_binary();
  const std::string base = "sweep beta --seed 7 --drops 100 --out ";
  const std::array<std::string, 4> outs{
      "/tmp/hetsim_c11_a.csv", "/tmp/hetsim_c11_b.csv",
      "/tmp/hetsim_c11_t1.csv", "/tmp/hetsim_c11_t4.csv"};
  CHECK_EQ(run_cli(bin, base + outs[0]), 0);
  CHECK_EQ(run_cli(bin, base + outs[1]), 0);
  CHECK_EQ(run_cli(bin, base + outs[2] + " --threads 1"), 0);
  CHECK_EQ(run_cli(bin, base + outs[3] + " --threads 4"), 0);
  const std::string first = read_file(outs[0]);
  bool identical = !first.empty();
  for (const std::string& path : outs) {
    identical = identical && read_file(path) == first;
    std::remove(path.c_str());
  }
  const bool has_table = first.find("grid_value") != std::string::npos &&
                         first.find("# seed=7") != std::string::npos;
  std::cout << verdict(identical && has_table)
            << " 11 CLI determinism: " << first.size()
            << "-byte CSV byte-identical across two runs and thread counts "
               "{default, 1, 4}\n";
  CHECK(identical);
  CHECK(has_table);
}

TEST_CASE("cli_sweep_stdout_runs") {
  const std::string bin = cli_binary();
  const std::string out = "/tmp/hetsim_smoke_sweep.json";
  CHECK_EQ(run_cli(bin, "sweep beta --grid 0,0.5 --drops 2 --format json --out -",
                   out),
           0);
  const std::string body = read_file(out);
  std::remove(out.c_str());
  CHECK_NE(body.find("\"rows\""), std::string::npos);
  CHECK_NE(body.find("\"grid_value\""), std::string::npos);
}

TEST_CASE("cli_inspect_runs") {
  const std::string bin = cli_binary();
  const std::string out = "/tmp/hetsim_smoke_inspect.json";
  CHECK_EQ(run_cli(bin, "inspect --seed 3 --drop-index 2", out), 0);
  const std::string body = read_file(out);
  std::remove(out.c_str());
  CHECK_NE(body.find("\"selected_m\""), std::string::npos);
  CHECK_NE(body.find("\"scenario_hash\""), std::string::npos);
  CHECK_NE(body.find("\"ues\""), std::string::npos);
}

TEST_CASE("cli_dynalloc_runs") {
  const std::string bin = cli_binary();
  const std::string trace = "/tmp/hetsim_smoke_trace.txt";
  {
    std::ofstream t(trace);
    t << "10 20\n20 20\n# comment line\n5 0\n";
  }
  const std::string out = "/tmp/hetsim_smoke_dynalloc.csv";
  CHECK_EQ(run_cli(bin, "dynalloc '" + trace + "'", out), 0);
  const std::string body = read_file(out);
  std::remove(trace.c_str());
  std::remove(out.c_str());
  CHECK_NE(body.find("step,voice_demand,data_demand"), std::string::npos);
  CHECK_NE(body.find("0,10,20,0,5,10,20,0,0"), std::string::npos);
  CHECK_NE(body.find("1,20,20,0,0,15,15,5,5"), std::string::npos);
  CHECK_NE(body.find("2,5,0,0,0,15,15,0,0"), std::string::npos);
}

TEST_CASE("cli_rejects_invalid_input") {
  const std::string bin = cli_binary();
  const std::string cfg = "/tmp/hetsim_smoke_bad_config.json";
  {
    std::ofstream c(cfg);
    c << R"({"game": {"beta": 7.0}})";
  }
  const std::string err = "/tmp/hetsim_smoke_err.txt";
  CHECK_NE(run_cli(bin, "sweep beta --drops 2 --config '" + cfg + "'", err), 0);
  const std::string body = read_file(err);
  std::remove(cfg.c_str());
  std::remove(err.c_str());
  CHECK_NE(body.find("game.beta"), std::string::npos);
  CHECK_NE(run_cli(bin, "sweep bogus --drops 2"), 0);
  CHECK_EQ(run_cli(bin, "--version"), 0);
}
