// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// hetsim command line: Monte Carlo sweeps over the femtocell access game,
// single-drop inspection, and the voice/data channel-borrowing utility.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hetsim/dynalloc.hpp"
#include "hetsim/errors.hpp"
#include "hetsim/experiment.hpp"
#include "hetsim/scenario_io.hpp"
#include "hetsim/version.hpp"

namespace {

using namespace hetsim;

ValidatedScenario scenario_from_flag(const std::string& config_path) {
  const ScenarioConfig cfg =
      config_path.empty() ? default_scenario() : load_scenario_file(config_path);
  return validate(cfg);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError(out_path, "cannot open output file");
  out << content;
  if (!out) throw ValidationError(out_path, "write failed");
}

const char* kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Beta:
      return "beta";
    case SweepKind::Distance:
      return "distance";
    case SweepKind::Price:
      return "price";
  }
  return "?";
}

int cmd_sweep(const std::string& kind_str, const std::string& config_path,
              std::uint64_t seed, int n_drops, std::vector<double> grid,
              std::string out_path, const std::string& format, int threads) {
  const ValidatedScenario scenario = scenario_from_flag(config_path);
  const std::map<std::string, SweepKind> kinds{{"beta", SweepKind::Beta},
                                               {"distance", SweepKind::Distance},
                                               {"price", SweepKind::Price}};
  const SweepKind kind = kinds.at(kind_str);

  SweepSpec spec = default_sweep(kind, seed);
  spec.n_drops = n_drops;
  if (!grid.empty()) spec.grid = std::move(grid);

  const std::vector<SweepRow> rows = run_sweep(scenario, spec, threads);
  const SweepSummary digest = summarize(rows);

  OutputTable table = sweep_table(rows);
  table.metadata = {
      {"tool", std::string("hetsim ") + kVersion},
      {"kind", kind_name(kind)},
      {"seed", std::to_string(seed)},
      {"drops", std::to_string(spec.n_drops)},
      {"scenario_hash", scenario_hash_hex(scenario.config())},
      {"scenario", scenario_to_json(scenario.config()).dump()},
  };

  if (out_path.empty()) out_path = std::string("sweep_") + kind_name(kind) +
                                   (format == "json" ? ".json" : ".csv");
  write_output(out_path, format == "json" ? to_json(table) : to_csv(table));

  // Keep stdout machine-readable when the table itself goes there.
  std::ostream& log = out_path == "-" ? std::cerr : std::cout;
  log << "sweep kind=" << kind_name(kind) << " seed=" << seed
      << " drops=" << spec.n_drops << " rows=" << rows.size() << '\n';
  log << "subscriber_peak_grid=" << format_double(digest.subscriber_peak_grid)
      << " revenue_peak_grid=" << format_double(digest.revenue_peak_grid) << '\n';
  for (std::size_t c = 0; c < kSweepColumns.size(); ++c)
    log << kSweepColumns[c] << " min=" << format_double(digest.col_min[c])
        << " max=" << format_double(digest.col_max[c]) << '\n';
  if (out_path != "-") log << "wrote " << out_path << '\n';
  return 0;
}

const char* category_name(UeCategory c) {
  switch (c) {
    case UeCategory::Subscriber:
      return "subscriber";
    case UeCategory::IndoorNonsubscriber:
      return "indoor_nonsubscriber";
    case UeCategory::OutdoorNonsubscriber:
      return "outdoor_nonsubscriber";
  }
  return "?";
}

const char* role_name(UeRole r) {
  switch (r) {
    case UeRole::Subscriber:
      return "subscriber";
    case UeRole::Player:
      return "player";
    case UeRole::Independent:
      return "independent";
  }
  return "?";
}

int cmd_inspect(const std::string& config_path, std::uint64_t seed,
                std::uint64_t drop_index, const std::string& out_path) {
  const ValidatedScenario scenario = scenario_from_flag(config_path);
  const Drop drop = generate_drop(scenario, seed, drop_index);
  const UtilityTable table = utility_table(drop, scenario->game);
  const EquilibriumReport report = solve(drop, scenario->game);

  nlohmann::ordered_json doc;
  doc["tool"] = std::string("hetsim ") + kVersion;
  doc["seed"] = seed;
  doc["drop_index"] = drop_index;
  doc["scenario_hash"] = scenario_hash_hex(scenario.config());
  doc["noise_dbm"] = drop.noise_dbm;
  doc["counts"] = {{"subscribers", drop.n_subscribers()},
                   {"players", drop.n_players()},
                   {"independents", drop.n_independents()},
                   {"gate_muted_slots", drop.mute_count}};
  auto& ues = doc["ues"] = nlohmann::ordered_json::array();
  for (const UeRecord& ue : drop.ues) {
    ues.push_back({{"id", ue.id},
                   {"category", category_name(ue.category)},
                   {"role", role_name(ue.role)},
                   {"x", ue.position.x},
                   {"y", ue.position.y},
                   {"gain_macro_db", ue.gain_macro.gain_db},
                   {"gain_fap_db", ue.gain_fap.gain_db},
                   {"rsp_macro_dbm", ue.rsp_macro_dbm},
                   {"rsp_fap_dbm", ue.rsp_fap_dbm}});
  }
  doc["utilities"] = {{"u0", table.u0}, {"u1", table.u1}};
  std::vector<int> femto_choice(report.selected_profile.choices.begin(),
                                report.selected_profile.choices.end());
  doc["equilibrium"] = {{"ne_counts", report.ne_counts},
                        {"selected_m", report.selected_m},
                        {"selected_profile", femto_choice},
                        {"u0_at_ne", report.u0_at_ne},
                        {"u1_at_ne", report.u1_at_ne},
                        {"revenue", report.revenue}};
  doc["rates"] = {{"per_subscriber_bps", report.rates.per_subscriber_bps},
                  {"per_player_bps", report.rates.per_player_bps},
                  {"per_independent_bps", report.rates.per_independent_bps},
                  {"system_bps", report.rates.system_bps},
                  {"per_ue_bps", report.rates.per_ue_bps}};
  write_output(out_path, doc.dump(2) + "\n");
  return 0;
}

int cmd_dynalloc(const std::string& trace_path, int total, int voice_owned,
                 const std::string& out_path) {
  std::ifstream in(trace_path);
  if (!in) throw ValidationError(trace_path, "cannot open trace file");

  ChannelPool pool = make_pool(total, voice_owned);
  OutputTable table;
  table.metadata = {{"tool", std::string("hetsim ") + kVersion},
                    {"total", std::to_string(total)},
                    {"voice_owned", std::to_string(voice_owned)}};
  table.header = {"step",           "voice_demand",  "data_demand",
                  "lent_to_voice",  "lent_to_data",  "effective_voice",
                  "effective_data", "blocked_voice", "blocked_data"};

  std::string line;
  int line_no = 0;
  int step = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int voice_demand = 0;
    int data_demand = 0;
    if (!(fields >> voice_demand >> data_demand))
      throw ValidationError(trace_path + ":" + std::to_string(line_no),
                            "expected two integers: voice_demand data_demand");
    std::string extra;
    if (fields >> extra)
      throw ValidationError(trace_path + ":" + std::to_string(line_no),
                            "trailing content after the two demand fields");
    if (voice_demand < 0 || data_demand < 0)
      throw ValidationError(trace_path + ":" + std::to_string(line_no),
                            "demands must be non-negative");
    pool = rebalance(pool, voice_demand, data_demand);
    table.rows.push_back({static_cast<double>(step), static_cast<double>(voice_demand),
                          static_cast<double>(data_demand),
                          static_cast<double>(pool.lent_to_voice),
                          static_cast<double>(pool.lent_to_data),
                          static_cast<double>(pool.effective_voice),
                          static_cast<double>(pool.effective_data),
                          static_cast<double>(pool.blocked_voice),
                          static_cast<double>(pool.blocked_data)});
    ++step;
  }
  write_output(out_path, to_csv(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier macro/femtocell access-game simulator"};
  app.set_version_flag("--version", std::string("hetsim ") + kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 42;
  int threads = 0;

  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo parameter sweep");
  std::string sweep_kind;
  int n_drops = 1000;
  std::vector<double> grid;
  std::string out_path;
  std::string format = "csv";
  sweep->add_option("kind", sweep_kind, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"beta", "distance", "price"}));
  sweep->add_option("--config", config_path, "Scenario JSON file");
  sweep->add_option("--seed", seed, "Top-level RNG seed")->capture_default_str();
  sweep->add_option("--drops", n_drops, "Monte Carlo drops per grid value")->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--grid", grid, "Comma-separated grid values")->delimiter(',');
  sweep->add_option("--out", out_path,
                    "Output path, '-' for stdout (default sweep_<kind>.<format>)");
  sweep->add_option("--format", format, "Output format")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", threads, "Worker threads, 0 = hardware")->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto* inspect = app.add_subcommand("inspect", "Dump one drop and its equilibrium");
  std::uint64_t drop_index = 0;
  std::string inspect_out = "-";
  inspect->add_option("--config", config_path, "Scenario JSON file");
  inspect->add_option("--seed", seed, "Top-level RNG seed")->capture_default_str();
  inspect->add_option("--drop-index", drop_index, "Drop to inspect")->capture_default_str();
  inspect->add_option("--out", inspect_out, "Output path, '-' for stdout")->capture_default_str();

  auto* dynalloc = app.add_subcommand(
      "dynalloc", "Replay a voice/data demand trace through the channel pool");
  std::string trace_path;
  int total = 30;
  int voice_owned = 15;
  std::string dynalloc_out = "-";
  dynalloc->add_option("trace", trace_path, "Demand trace file")->required();
  dynalloc->add_option("--total", total, "Total channels")->capture_default_str()
      ->check(CLI::PositiveNumber);
  dynalloc->add_option("--voice-owned", voice_owned, "Channels owned by voice")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  dynalloc->add_option("--out", dynalloc_out, "Output path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sweep->parsed())
      return cmd_sweep(sweep_kind, config_path, seed, n_drops, std::move(grid),
                       std::move(out_path), format, threads);
    if (inspect->parsed())
      return cmd_inspect(config_path, seed, drop_index, inspect_out);
    if (dynalloc->parsed())
      return cmd_dynalloc(trace_path, total, voice_owned, dynalloc_out);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
