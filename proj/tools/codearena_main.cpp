// Copyright 2026 The CodeArena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: run tournaments, build leaderboards, emit
// analytics tables, replay logs.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "analytics/dynamics.hpp"
#include "analytics/hygiene.hpp"
#include "arena/arena.hpp"
#include "engine/config.hpp"
#include "engine/records_io.hpp"
#include "engine/tournament.hpp"
#include "rating/bootstrap.hpp"
#include "rating/bradley_terry.hpp"
#include "rating/stability.hpp"
#include "sandbox/manifest.hpp"
#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/rng.hpp"
#include "util/text.hpp"

namespace {

namespace fs = std::filesystem;
using codearena::ConfigError;
using codearena::DataError;
using codearena::FormatFixed;
using codearena::InfraError;
using codearena::PadInt;
using codearena::Rng;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfra = 3;

// ---------------------------------------------------------------------------
// Table rendering: fixed-width text by default, comma-separated with --csv.

class Table {
 public:
  explicit Table(std::vector<std::string> header)
      : header_(std::move(header)) {}

  void AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void Print(std::ostream& out, bool csv) const {
    if (csv) {
      PrintDelimited(out);
      return;
    }
    std::vector<std::size_t> widths(header_.size(), 0);
    for (std::size_t c = 0; c < header_.size(); ++c) {
      widths[c] = header_[c].size();
    }
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    PrintPadded(out, header_, widths);
    for (const auto& row : rows_) PrintPadded(out, row, widths);
  }

 private:
  void PrintDelimited(std::ostream& out) const {
    out << Join(header_) << '\n';
    for (const auto& row : rows_) out << Join(row) << '\n';
  }
  static std::string Join(const std::vector<std::string>& cells) {
    std::string line;
    for (const auto& cell : cells) {
      if (!line.empty()) line += ',';
      line += cell;
    }
    return line;
  }
  void PrintPadded(std::ostream& out, const std::vector<std::string>& cells,
                   const std::vector<std::size_t>& widths) const {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[c];
      if (c + 1 < cells.size()) {
        for (std::size_t pad = cells[c].size(); pad < widths[c]; ++pad) {
          out << ' ';
        }
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// ---------------------------------------------------------------------------
// Shared results loading.

struct LoadedResults {
  std::vector<codearena::engine::TournamentRecord> records;  // completed only
  std::vector<fs::path> dirs;                                // aligned
  int skipped_aborted = 0;
  int skipped_multiplayer = 0;
};

LoadedResults LoadResults(const std::vector<std::string>& paths,
                          bool pairwise_only) {
  LoadedResults loaded;
  std::vector<fs::path> dirs;
  for (const auto& p : paths) {
    for (const auto& dir : codearena::engine::FindResultsDirs(p)) {
      dirs.push_back(dir);
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  for (const auto& dir : dirs) {
    auto record = codearena::engine::ReadTournamentSummary(dir / "tournament.txt");
    if (!record.aborted_reason.empty()) {
      ++loaded.skipped_aborted;
      continue;
    }
    if (pairwise_only && record.players.size() != 2) {
      ++loaded.skipped_multiplayer;
      continue;
    }
    loaded.records.push_back(std::move(record));
    loaded.dirs.push_back(dir);
  }
  return loaded;
}

// ---------------------------------------------------------------------------
// run

int CmdRun(const std::string& config_path, const std::string& out_dir,
           std::optional<std::uint64_t> seed_override,
           std::optional<std::string> stamp_override) {
  codearena::arena::RegisterBuiltinArenas();
  codearena::engine::TournamentConfig config =
      codearena::engine::LoadConfigFile(config_path);
  if (seed_override) config.master_seed = *seed_override;
  if (stamp_override) config.stamp = *stamp_override;
  codearena::engine::TournamentRecord record =
      codearena::engine::RunTournament(config, out_dir);
  std::cout << "tournament " << record.tournament_id << " complete\n";
  std::cout << "winner: "
            << (record.tournament_winner.empty() ? "DRAW"
                                                 : record.tournament_winner)
            << '\n';
  std::cout << "results: " << (fs::path(out_dir) / record.tournament_id).string()
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// leaderboard

struct RatingBlock {
  bool fitted = false;
  std::string note;
  codearena::rating::WinMatrix matrix;
  codearena::rating::StrengthFit fit;
  codearena::rating::EloReport elo;
};

RatingBlock FitBlock(const std::vector<codearena::rating::MatchupResult>& results) {
  RatingBlock block;
  if (results.size() < 2) {
    block.note = "insufficient data for Elo (need at least 2 tournaments)";
    return block;
  }
  try {
    block.matrix = codearena::rating::WinMatrix::FromResults(results);
    block.fit = codearena::rating::Fit(block.matrix);
    auto cov = codearena::rating::Covariance(block.fit, block.matrix);
    block.elo = codearena::rating::ToElo(block.fit, &cov);
    block.fitted = true;
  } catch (const DataError& e) {
    block.note = std::string("Elo fit unavailable: ") + e.what();
  } catch (const codearena::NumericalError& e) {
    block.note = std::string("Elo fit unavailable: ") + e.what();
  }
  return block;
}

std::vector<codearena::rating::MatchupResult> ToMatchups(
    const std::vector<codearena::engine::TournamentRecord>& records,
    bool round_granularity) {
  std::vector<codearena::rating::MatchupResult> matchups;
  for (const auto& record : records) {
    if (round_granularity) {
      for (const auto& round : record.rounds) {
        matchups.push_back(
            {record.players[0], record.players[1], round.round_winner});
      }
    } else {
      matchups.push_back({record.players[0], record.players[1],
                          record.draw ? "" : record.tournament_winner});
    }
  }
  return matchups;
}

int CmdLeaderboard(const std::vector<std::string>& paths,
                   const std::string& granularity,
                   const std::string& bootstrap_method, int bootstrap_samples,
                   std::uint64_t bootstrap_seed, bool csv) {
  LoadedResults loaded = LoadResults(paths, true);
  if (loaded.skipped_aborted > 0) {
    std::cerr << "warning: skipped " << loaded.skipped_aborted
              << " aborted tournament(s)\n";
  }
  if (loaded.skipped_multiplayer > 0) {
    std::cerr << "warning: skipped " << loaded.skipped_multiplayer
              << " tournament(s) with more than 2 players (Elo is "
                 "head-to-head only)\n";
  }
  if (loaded.records.empty()) {
    std::cerr << "error: no usable results\n";
    return kExitUsage;
  }
  const bool round_granularity = granularity == "round";
  if (round_granularity) {
    std::cerr << "warning: round-level fits treat rounds as independent "
                 "Bernoulli trials, which tournament play violates; "
                 "tournament granularity is the supported default\n";
  }

  auto matchups = ToMatchups(loaded.records, round_granularity);
  std::set<std::string> arena_set;
  std::set<std::string> player_set;
  for (const auto& record : loaded.records) {
    arena_set.insert(record.arena_id);
    player_set.insert(record.players.begin(), record.players.end());
  }

  RatingBlock overall = FitBlock(matchups);

  // Stable order: rating descending, then id.
  std::vector<std::string> order(player_set.begin(), player_set.end());
  if (overall.fitted) {
    std::sort(order.begin(), order.end(),
              [&](const std::string& a, const std::string& b) {
                double ra = overall.elo.rating[overall.matrix.IndexOf(a)];
                double rb = overall.elo.rating[overall.matrix.IndexOf(b)];
                if (ra != rb) return ra > rb;
                return a < b;
              });
  }

  // Win-rate matrix: row beats column, draws count in the denominator.
  auto win_rates = codearena::analytics::ComputeWinRates(matchups);
  std::cout << "Win rates (row beats column, % of "
            << (round_granularity ? "rounds" : "tournaments") << "):\n";
  Table win_table([&] {
    std::vector<std::string> header{"player"};
    for (const auto& p : order) header.push_back(p);
    return header;
  }());
  auto rate_index = [&](const std::string& id) {
    return static_cast<int>(std::find(win_rates.ids.begin(),
                                      win_rates.ids.end(), id) -
                            win_rates.ids.begin());
  };
  for (const auto& row : order) {
    std::vector<std::string> cells{row};
    for (const auto& col : order) {
      if (row == col) {
        cells.push_back("-");
        continue;
      }
      auto value = win_rates.rate[rate_index(row)][rate_index(col)];
      cells.push_back(value ? FormatFixed(100.0 * *value, 1)
                            : std::string("-"));
    }
    win_table.AddRow(std::move(cells));
  }
  win_table.Print(std::cout, csv);

  // Per-arena breakdown when several arenas are present; fitted per data
  // subset, independently of the overall fit.
  std::vector<std::string> arenas(arena_set.begin(), arena_set.end());
  std::map<std::string, RatingBlock> per_arena;
  if (arenas.size() > 1) {
    for (const auto& arena : arenas) {
      std::vector<codearena::engine::TournamentRecord> subset;
      for (const auto& record : loaded.records) {
        if (record.arena_id == arena) subset.push_back(record);
      }
      per_arena[arena] = FitBlock(ToMatchups(subset, round_granularity));
    }
  }

  std::cout << "\nElo ratings (base 1200, slope 400):\n";
  if (!overall.fitted) {
    std::cout << "  " << overall.note << "\n";
    // The joint fit can be unavailable (too little data, separation, or
    // players never linked across arenas) while per-arena fits stand.
    for (const auto& arena : arenas) {
      const RatingBlock& block = per_arena[arena];
      if (!block.fitted) continue;
      std::cout << "\nElo ratings, " << arena << " only:\n";
      Table arena_table({"player", "rating", "se"});
      std::vector<int> arena_order(block.matrix.size());
      for (int i = 0; i < block.matrix.size(); ++i) arena_order[i] = i;
      std::sort(arena_order.begin(), arena_order.end(), [&](int a, int b) {
        if (block.elo.rating[a] != block.elo.rating[b]) {
          return block.elo.rating[a] > block.elo.rating[b];
        }
        return block.matrix.ids()[a] < block.matrix.ids()[b];
      });
      for (int idx : arena_order) {
        arena_table.AddRow({block.matrix.ids()[idx],
                            FormatFixed(block.elo.rating[idx], 1),
                            FormatFixed(block.elo.se[idx], 1)});
      }
      arena_table.Print(std::cout, csv);
    }
  } else {
    std::vector<std::string> header{"player", "rating", "se", "tournaments"};
    if (arenas.size() > 1) {
      for (const auto& arena : arenas) header.push_back(arena);
    }
    Table elo_table(header);
    for (const auto& player : order) {
      int idx = overall.matrix.IndexOf(player);
      int played = 0;
      for (const auto& record : loaded.records) {
        if (record.players[0] == player || record.players[1] == player) {
          ++played;
        }
      }
      std::vector<std::string> cells{
          player, FormatFixed(overall.elo.rating[idx], 1),
          FormatFixed(overall.elo.se[idx], 1), std::to_string(played)};
      if (arenas.size() > 1) {
        for (const auto& arena : arenas) {
          const RatingBlock& block = per_arena[arena];
          int arena_idx = block.fitted ? block.matrix.IndexOf(player) : -1;
          cells.push_back(arena_idx >= 0
                              ? FormatFixed(block.elo.rating[arena_idx], 1)
                              : "-");
        }
      }
      elo_table.AddRow(std::move(cells));
    }
    elo_table.Print(std::cout, csv);

    if (!bootstrap_method.empty()) {
      Rng rng(bootstrap_seed);
      codearena::rating::BootstrapReport report;
      if (bootstrap_method == "nonparametric") {
        report = codearena::rating::BootstrapNonparametric(
            matchups, bootstrap_samples, rng);
      } else {
        report = codearena::rating::BootstrapParametric(
            overall.fit, overall.matrix, bootstrap_samples, rng);
      }
      auto reference =
          codearena::rating::RankingFromRatings(overall.elo.rating);
      auto stability =
          codearena::rating::Stability(reference, report.rank_samples);
      std::cout << "\nBootstrap (" << bootstrap_method
                << ", B=" << bootstrap_samples << ", "
                << report.elo_samples.size() << " refits ok, "
                << report.samples_failed << " failed):\n";
      Table sd_table({"player", "bootstrap_sd"});
      for (const auto& player : order) {
        int idx = overall.matrix.IndexOf(player);
        sd_table.AddRow({player, FormatFixed(report.sd[idx], 1)});
      }
      sd_table.Print(std::cout, csv);
      std::cout << "\nRank stability vs. point ranking:\n";
      Table stability_table({"metric", "value"});
      stability_table.AddRow(
          {"kendall_tau", FormatFixed(stability.kendall_tau, 3)});
      stability_table.AddRow(
          {"spearman_rho", FormatFixed(stability.spearman_rho, 3)});
      stability_table.AddRow(
          {"footrule_normalized",
           FormatFixed(stability.footrule_normalized, 3)});
      stability_table.AddRow(
          {"top1_consistency", FormatFixed(stability.top1_consistency, 3)});
      stability_table.AddRow(
          {"pairwise_order_agreement",
           FormatFixed(stability.pairwise_order_agreement, 3)});
      stability_table.Print(std::cout, csv);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

const std::vector<std::string> kAllMetrics = {
    "comeback",   "leadchange", "winshare", "diversity",
    "redundancy", "throwaway",  "hygiene"};

struct TournamentData {
  codearena::engine::TournamentRecord record;
  fs::path dir;
  // Per player: per-round file events reconstructed from the manifests.
  std::map<std::string, std::vector<codearena::sandbox::FileEvents>> events;
};

std::vector<codearena::sandbox::FileEvents> LoadEvents(
    const fs::path& dir, const std::string& player, int rounds) {
  std::vector<codearena::sandbox::FileEvents> events;
  codearena::sandbox::FileManifest previous;
  for (int r = 0; r <= rounds; ++r) {
    fs::path manifest_path = dir / ("round_" + PadInt(r, 2)) /
                             ("manifest_" + player + ".txt");
    if (!fs::is_regular_file(manifest_path)) {
      if (r == 0) return {};
      break;
    }
    auto manifest = codearena::sandbox::LoadManifest(manifest_path);
    manifest.recorded_round = r;
    if (r > 0) {
      events.push_back(codearena::sandbox::DiffManifests(previous, manifest));
    }
    previous = std::move(manifest);
  }
  return events;
}

codearena::analytics::ContentReader WorkspaceReader(const fs::path& dir,
                                                    const std::string& player) {
  fs::path root = dir / "workspaces" / player;
  return [root](const std::string& rel) -> std::optional<std::string> {
    fs::path file = root / rel;
    if (!fs::is_regular_file(file)) return std::nullopt;
    return codearena::ReadFileOrThrow(file);
  };
}

codearena::analytics::RoundResult ResultFor(const std::string& winner,
                                            const std::string& player) {
  if (winner.empty()) return codearena::analytics::RoundResult::kTie;
  return winner == player ? codearena::analytics::RoundResult::kWin
                          : codearena::analytics::RoundResult::kLoss;
}

int CmdAnalyze(const std::string& path, std::vector<std::string> metrics,
               bool csv) {
  std::set<std::string> wanted;
  for (const auto& metric : metrics) {
    if (metric == "all") {
      wanted.insert(kAllMetrics.begin(), kAllMetrics.end());
      continue;
    }
    if (std::find(kAllMetrics.begin(), kAllMetrics.end(), metric) ==
        kAllMetrics.end()) {
      std::cerr << "error: unknown metric '" << metric << "'; valid:";
      for (const auto& name : kAllMetrics) std::cerr << ' ' << name;
      std::cerr << " all\n";
      return kExitUsage;
    }
    wanted.insert(metric);
  }
  if (wanted.empty()) wanted.insert(kAllMetrics.begin(), kAllMetrics.end());

  LoadedResults loaded = LoadResults({path}, false);
  if (loaded.records.empty()) {
    std::cerr << "error: no usable results under " << path << '\n';
    return kExitUsage;
  }

  std::vector<TournamentData> data;
  std::set<std::string> players;
  for (std::size_t i = 0; i < loaded.records.size(); ++i) {
    TournamentData t;
    t.record = loaded.records[i];
    t.dir = loaded.dirs[i];
    for (const auto& player : t.record.players) {
      players.insert(player);
      t.events[player] =
          LoadEvents(t.dir, player, static_cast<int>(t.record.rounds.size()));
    }
    data.push_back(std::move(t));
  }

  if (wanted.count("comeback")) {
    std::cout << "Comeback probability (win after losing exactly k rounds):\n";
    Table table({"player", "k", "events", "next_wins", "probability"});
    for (const auto& player : players) {
      std::vector<codearena::analytics::OutcomeSeries> series;
      std::size_t longest = 0;
      for (const auto& t : data) {
        if (std::find(t.record.players.begin(), t.record.players.end(),
                      player) == t.record.players.end()) {
          continue;
        }
        codearena::analytics::OutcomeSeries outcome;
        for (const auto& round : t.record.rounds) {
          outcome.push_back(ResultFor(round.round_winner, player));
        }
        longest = std::max(longest, outcome.size());
        series.push_back(std::move(outcome));
      }
      for (int k = 1; k < static_cast<int>(longest); ++k) {
        auto stat = codearena::analytics::ComebackProbability(series, k);
        if (stat.events == 0) continue;
        table.AddRow({player, std::to_string(k), std::to_string(stat.events),
                      std::to_string(stat.next_round_wins),
                      FormatFixed(*stat.probability, 3)});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  if (wanted.count("leadchange")) {
    std::vector<std::vector<std::string>> winners;
    for (const auto& t : data) {
      std::vector<std::string> per;
      for (const auto& round : t.record.rounds) {
        per.push_back(round.round_winner);
      }
      winners.push_back(std::move(per));
    }
    auto rate = codearena::analytics::LeadChangeRate(winners);
    std::cout << "Lead changes (consecutive non-tie winners differing):\n";
    Table table({"tournaments", "rate"});
    table.AddRow({std::to_string(data.size()),
                  rate ? FormatFixed(*rate, 3) : std::string("-")});
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  if (wanted.count("winshare")) {
    std::cout << "Win share (round wins / non-tie rounds):\n";
    Table table({"tournament", "player", "share"});
    for (const auto& t : data) {
      std::vector<std::string> winners;
      for (const auto& round : t.record.rounds) {
        winners.push_back(round.round_winner);
      }
      auto share = codearena::analytics::WinShare(t.record.players, winners);
      for (const auto& player : t.record.players) {
        table.AddRow({t.record.tournament_id, player,
                      share ? FormatFixed(share->at(player), 3)
                            : std::string("-")});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  if (wanted.count("diversity")) {
    std::cout << "Solution diversity (mean pairwise similarity across "
                 "tournaments):\n";
    Table table({"player", "round", "texts", "mean_similarity"});
    std::size_t rounds = 0;
    for (const auto& t : data) {
      rounds = std::max(rounds, t.record.rounds.size());
    }
    for (const auto& player : players) {
      for (int r = 1; r <= static_cast<int>(rounds); ++r) {
        std::vector<std::string> texts;
        // data is ordered by directory path; tournament ids order
        // identically within one listing, which pins pair order.
        for (const auto& t : data) {
          fs::path round_dir = t.dir / ("round_" + PadInt(r, 2));
          if (!fs::is_directory(round_dir)) continue;
          for (const auto& entry : fs::directory_iterator(round_dir)) {
            std::string name = entry.path().filename().string();
            if (name.rfind("solution_" + player + ".", 0) == 0) {
              texts.push_back(codearena::ReadFileOrThrow(entry.path()));
            }
          }
        }
        auto sample = codearena::analytics::SolutionDiversity(r, texts);
        if (sample.texts == 0) continue;
        table.AddRow({player, std::to_string(r), std::to_string(sample.texts),
                      sample.mean_pairwise
                          ? FormatFixed(*sample.mean_pairwise, 3)
                          : std::string("-")});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  bool any_manifest = false;
  for (const auto& t : data) {
    for (const auto& [player, events] : t.events) {
      if (!events.empty()) any_manifest = true;
    }
  }
  if (!any_manifest &&
      (wanted.count("redundancy") || wanted.count("throwaway") ||
       wanted.count("hygiene"))) {
    std::cerr << "warning: no per-round manifests found; file hygiene "
                 "metrics are absent\n";
  }

  if (wanted.count("redundancy")) {
    std::cout << "Filename redundancy (shared normalized name tokens):\n";
    Table table({"tournament", "player", "created", "redundancy"});
    for (const auto& t : data) {
      for (const auto& player : t.record.players) {
        std::vector<std::string> created;
        for (const auto& events : t.events.at(player)) {
          created.insert(created.end(), events.created.begin(),
                         events.created.end());
        }
        auto value = codearena::analytics::FilenameRedundancy(created);
        table.AddRow({t.record.tournament_id, player,
                      std::to_string(created.size()),
                      value ? FormatFixed(*value, 3) : std::string("-")});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  if (wanted.count("throwaway")) {
    std::cout << "Throwaway files (created, never used afterwards):\n";
    Table table({"tournament", "player", "root", "subdirectory"});
    for (const auto& t : data) {
      for (const auto& player : t.record.players) {
        auto report = codearena::analytics::ThrowawayFiles(
            t.events.at(player), WorkspaceReader(t.dir, player));
        table.AddRow({t.record.tournament_id, player,
                      std::to_string(report.root.size()),
                      std::to_string(report.subdirectory.size())});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  if (wanted.count("hygiene")) {
    std::cout << "Codebase hygiene (root clutter and file reuse):\n";
    Table table({"tournament", "player", "root_clutter", "file_reuse"});
    for (const auto& t : data) {
      for (const auto& player : t.record.players) {
        auto ratios = codearena::analytics::ComputeHygieneRatios(
            t.events.at(player), WorkspaceReader(t.dir, player));
        table.AddRow(
            {t.record.tournament_id, player,
             ratios.root_clutter ? FormatFixed(*ratios.root_clutter, 3)
                                 : std::string("-"),
             ratios.file_reuse ? FormatFixed(*ratios.file_reuse, 3)
                               : std::string("-")});
      }
    }
    table.Print(std::cout, csv);
    std::cout << '\n';
  }

  return kExitOk;
}

// ---------------------------------------------------------------------------
// replay

int RenderGridSnakeLog(const std::vector<std::string>& lines) {
  std::map<std::string, int> letter_of;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (codearena::TrimWhitespace(line).empty()) continue;
    auto record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("turn") ||
        !record.contains("board") || !record["board"].contains("width") ||
        !record["board"].contains("height") ||
        !record["board"].contains("snakes") ||
        !record["board"].contains("food")) {
      std::cerr << "error: schema violation at line " << (i + 1) << '\n';
      return kExitUsage;
    }
    const auto& board = record["board"];
    int width = board["width"].get<int>();
    int height = board["height"].get<int>();
    std::vector<std::string> grid(height, std::string(width, '.'));
    auto plot = [&](const nlohmann::json& coord, char c) {
      int x = coord["x"].get<int>();
      int y = coord["y"].get<int>();
      if (x >= 0 && x < width && y >= 0 && y < height) {
        grid[y][x] = c;
      }
    };
    for (const auto& food : board["food"]) plot(food, '*');
    for (const auto& snake : board["snakes"]) {
      std::string id = snake["id"].get<std::string>();
      if (!letter_of.count(id)) {
        letter_of[id] = static_cast<int>(letter_of.size());
      }
      char body = static_cast<char>('a' + letter_of[id] % 26);
      for (const auto& cell : snake["body"]) plot(cell, body);
      plot(snake["head"], static_cast<char>('A' + letter_of[id] % 26));
    }
    std::cout << "turn " << record["turn"].get<int>();
    for (const auto& snake : board["snakes"]) {
      std::string id = snake["id"].get<std::string>();
      std::cout << "  " << static_cast<char>('A' + letter_of[id] % 26) << '='
                << id << "(hp " << snake["health"].get<int>() << ", len "
                << snake["length"].get<int>() << ")";
    }
    std::cout << '\n';
    // y grows upward: print top row first.
    for (int y = height - 1; y >= 0; --y) {
      std::cout << "  " << grid[y] << '\n';
    }
    if (record.contains("eliminations")) {
      for (const auto& e : record["eliminations"]) {
        std::cout << "  out: " << e["id"].get<std::string>() << " ("
                  << e["cause"].get<std::string>() << ")\n";
      }
    }
  }
  return kExitOk;
}

int RenderNumberDuelLog(const std::vector<std::string>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = codearena::TrimWhitespace(lines[i]);
    if (line.empty()) continue;
    bool has_winner = false;
    for (const auto& token : codearena::SplitString(line, ' ')) {
      if (token.empty()) continue;
      auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) {
        std::cerr << "error: schema violation at line " << (i + 1) << '\n';
        return kExitUsage;
      }
      if (token.substr(0, eq) == "winner") has_winner = true;
    }
    if (!has_winner) {
      std::cerr << "error: schema violation at line " << (i + 1)
                << " (no winner field)\n";
      return kExitUsage;
    }
    std::cout << "outcome: " << line << '\n';
  }
  return kExitOk;
}

int CmdReplay(const std::string& path) {
  if (!fs::is_regular_file(path)) {
    std::cerr << "error: no such log file: " << path << '\n';
    return kExitUsage;
  }
  std::string text = codearena::ReadFileOrThrow(path);
  std::vector<std::string> lines = codearena::SplitString(text, '\n');
  while (!lines.empty() && codearena::TrimWhitespace(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    std::cerr << "error: empty log file\n";
    return kExitUsage;
  }
  auto first = nlohmann::json::parse(lines[0], nullptr, false);
  if (!first.is_discarded() && first.is_object()) {
    return RenderGridSnakeLog(lines);
  }
  return RenderNumberDuelLog(lines);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"code-arena tournament engine and rating toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> stamp_override;
  auto* run = app.add_subcommand("run", "run a tournament from a config file");
  run->add_option("--config", config_path, "tournament config file")
      ->required();
  run->add_option("--out", out_dir, "output directory for results")
      ->required();
  std::uint64_t seed_value = 0;
  std::string stamp_value;
  auto* seed_opt = run->add_option("--seed", seed_value,
                                   "override the master seed");
  auto* stamp_opt = run->add_option(
      "--stamp", stamp_value,
      "fixed yymmddHHMMSS id stamp (reproducible result trees)");

  std::vector<std::string> board_paths;
  std::string granularity = "tournament";
  std::string bootstrap_method;
  int bootstrap_samples = 1000;
  std::uint64_t bootstrap_seed = 0;
  bool board_csv = false;
  auto* leaderboard = app.add_subcommand(
      "leaderboard", "win rates and Elo ratings from results directories");
  leaderboard->add_option("dirs", board_paths, "results directories")
      ->required()
      ->expected(-1);
  leaderboard
      ->add_option("--granularity", granularity,
                   "fit on tournament wins (default) or, with a caveat, "
                   "per-round wins")
      ->check(CLI::IsMember({"tournament", "round"}));
  leaderboard
      ->add_option("--bootstrap", bootstrap_method,
                   "append bootstrap rank-stability metrics")
      ->check(CLI::IsMember({"nonparametric", "parametric"}));
  leaderboard->add_option("--B", bootstrap_samples, "bootstrap sample count")
      ->check(CLI::PositiveNumber);
  leaderboard->add_option("--seed", bootstrap_seed, "bootstrap rng seed");
  leaderboard->add_flag("--csv", board_csv, "emit comma-separated tables");

  std::string analyze_path;
  std::vector<std::string> metrics;
  bool analyze_csv = false;
  auto* analyze = app.add_subcommand(
      "analyze", "competition-dynamics and hygiene metrics");
  analyze->add_option("dir", analyze_path, "results directory")->required();
  analyze
      ->add_option("--metrics", metrics,
                   "metric names (or 'all'): comeback leadchange winshare "
                   "diversity redundancy throwaway hygiene")
      ->delimiter(',');
  analyze->add_flag("--csv", analyze_csv, "emit comma-separated tables");

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "render a per-sim log as text");
  replay->add_option("file", replay_path, "sim log file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(run)) {
      if (seed_opt->count() > 0) seed_override = seed_value;
      if (stamp_opt->count() > 0) stamp_override = stamp_value;
      return CmdRun(config_path, out_dir, seed_override, stamp_override);
    }
    if (app.got_subcommand(leaderboard)) {
      return CmdLeaderboard(board_paths, granularity, bootstrap_method,
                            bootstrap_samples, bootstrap_seed, board_csv);
    }
    if (app.got_subcommand(analyze)) {
      return CmdAnalyze(analyze_path, metrics, analyze_csv);
    }
    if (app.got_subcommand(replay)) {
      return CmdReplay(replay_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfra;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfra;
  }
  return kExitUsage;
}
