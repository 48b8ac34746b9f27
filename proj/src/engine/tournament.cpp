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

#include "engine/tournament.hpp"

#include <algorithm>
#include <ctime>

#include "arena/arena.hpp"
#include "engine/records_io.hpp"
#include "sandbox/manifest.hpp"
#include "sandbox/workspace.hpp"
#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::engine {

namespace fs = std::filesystem;

namespace {

// Wall clock and output cap for one editor step.
const sandbox::ExecLimits kEditorStepLimits{60.0, 1 << 20};

constexpr std::uint64_t kShufflePurpose = 0x7368756646ull;
constexpr std::uint64_t kMatchPurpose = 0x6d61746368ull;

std::string NowStampUtc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof(buf), "%y%m%d%H%M%S", &tm);
  return buf;
}

struct TournamentContext {
  const TournamentConfig* config = nullptr;
  const arena::Arena* arena = nullptr;
  fs::path results_dir;
  std::vector<sandbox::Workspace> workspaces;
  TournamentRecord* record = nullptr;
};

fs::path OpponentSnapshotDir(const TournamentContext& ctx, int round_index,
                             const std::string& player_id) {
  return ctx.results_dir / "opponent_snapshots" /
         sandbox::RoundDirName(round_index) / player_id;
}

void MountOpponents(const TournamentContext& ctx, int round_index) {
  const auto& players = ctx.config->players;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const sandbox::Workspace& ws = ctx.workspaces[i];
    std::vector<std::string> opponents;
    for (const auto& other : players) {
      if (other.player_id != players[i].player_id) {
        opponents.push_back(other.player_id);
      }
    }
    if (opponents.size() == 1) {
      sandbox::MountOpponentReadonly(
          ws, OpponentSnapshotDir(ctx, round_index - 1, opponents[0]));
      continue;
    }
    // Several opponents: stage one directory per opponent, then mount.
    fs::path staging =
        ctx.results_dir / (".staging_opponent_" + players[i].player_id);
    RemoveTreeForced(staging);
    for (const auto& opp : opponents) {
      CopyTree(OpponentSnapshotDir(ctx, round_index - 1, opp), staging / opp);
    }
    sandbox::MountOpponentReadonly(ws, staging);
    RemoveTreeForced(staging);
  }
}

void PersistSolutionCopies(const TournamentContext& ctx,
                           const fs::path& round_dir) {
  const std::string& solution = ctx.arena->descriptor().solution_file;
  if (solution.empty()) return;
  for (const auto& ws : ctx.workspaces) {
    fs::path source = ws.root / solution;
    if (!fs::is_regular_file(source)) continue;
    std::string ext = fs::path(solution).extension().string();  // ".py"
    fs::copy_file(source, round_dir / ("solution_" + ws.player_id + ext),
                  fs::copy_options::overwrite_existing);
  }
}

RoundRecord RunRound(TournamentContext& ctx, int round_index) {
  const TournamentConfig& config = *ctx.config;
  RoundRecord round;
  round.round_index = round_index;
  round.log_dir = sandbox::RoundDirName(round_index);
  fs::path round_dir = ctx.results_dir / round.log_dir;
  fs::create_directories(round_dir);

  if (config.opponent_visibility && round_index > 1) {
    MountOpponents(ctx, round_index);
  }

  // Edit phase.
  for (std::size_t i = 0; i < config.players.size(); ++i) {
    sandbox::RunEditor(config.players[i].editor, ctx.workspaces[i],
                       round_index, config.edit_step_budget,
                       kEditorStepLimits);
  }
  for (const auto& ws : ctx.workspaces) {
    sandbox::FileManifest manifest = sandbox::Snapshot(ws.root, round_index);
    sandbox::SaveManifest(manifest,
                          round_dir / ("manifest_" + ws.player_id + ".txt"));
  }
  PersistSolutionCopies(ctx, round_dir);
  if (config.opponent_visibility && round_index < config.rounds) {
    for (const auto& ws : ctx.workspaces) {
      sandbox::CopyCodeSnapshot(
          ws, OpponentSnapshotDir(ctx, round_index, ws.player_id));
    }
  }

  // Validation, then the invalid-submission decision tree.
  for (const auto& ws : ctx.workspaces) {
    arena::ValidationReport report = ctx.arena->Validate(ws.root);
    round.validity[ws.player_id] = report.ok;
    if (!report.ok) round.invalid_reason[ws.player_id] = report.reason;
  }
  ValidityResolution resolution = ResolveValidity(round.validity);
  round.disposition = resolution.disposition;

  Rng shuffle_rng(RoundShuffleSeed(config.master_seed, round_index));
  std::vector<std::string> all_ids;
  for (const auto& p : config.players) all_ids.push_back(p.player_id);
  round.player_order = ShuffleOrder(shuffle_rng, all_ids);

  for (const auto& p : config.players) round.sim_wins[p.player_id] = 0;

  switch (resolution.disposition) {
    case Disposition::kPlayed: {
      std::vector<arena::Participant> participants;
      for (const auto& id : round.player_order) {
        if (std::find(resolution.participants.begin(),
                      resolution.participants.end(),
                      id) == resolution.participants.end()) {
          continue;
        }
        for (const auto& ws : ctx.workspaces) {
          if (ws.player_id == id) {
            participants.push_back({id, ws.root});
          }
        }
      }
      arena::MatchTally tally = arena::RunMatch(
          *ctx.arena, participants, config.sims_per_round,
          RoundMatchSeed(config.master_seed, round_index), round_dir);
      std::map<std::string, int> participant_wins;
      for (const auto& [id, wins] : tally.sim_wins) {
        round.sim_wins[id] = wins;
        participant_wins[id] = wins;
      }
      round.ties = tally.ties;
      for (const auto& p : config.players) {
        bool participated = participant_wins.count(p.player_id) > 0;
        round.score[p.player_id] =
            participated ? RoundScore(round.sim_wins[p.player_id], round.ties,
                                      config.sims_per_round)
                         : 0.0;
      }
      round.round_winner = DecideRoundWinner(participant_wins, round.ties);
      break;
    }
    case Disposition::kWalkover: {
      round.round_winner = resolution.participants.front();
      for (const auto& p : config.players) {
        round.score[p.player_id] =
            p.player_id == round.round_winner ? 100.0 : 0.0;
      }
      break;
    }
    case Disposition::kAllInvalidTie: {
      for (const auto& p : config.players) round.score[p.player_id] = 0.0;
      break;
    }
  }

  WriteFileOrThrow(round_dir / "tally.txt",
                   RoundTallyText(round, config.sims_per_round));

  // Codebase-as-memory: the round's competition output lands in every
  // player's logs/ before the next round starts.
  std::vector<fs::path> log_files;
  log_files.push_back(round_dir / "tally.txt");
  for (const auto& entry : fs::directory_iterator(round_dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("sim_", 0) == 0) log_files.push_back(entry.path());
  }
  std::sort(log_files.begin(), log_files.end());
  for (const auto& ws : ctx.workspaces) {
    sandbox::InjectLogs(ws, round_index, log_files);
  }
  return round;
}

void FinishRecord(TournamentRecord& record) {
  std::vector<std::string> winners;
  for (const auto& round : record.rounds) winners.push_back(round.round_winner);
  record.round_wins.clear();
  record.last_win_round.clear();
  for (const auto& p : record.players) record.round_wins[p] = 0;
  for (std::size_t i = 0; i < winners.size(); ++i) {
    if (winners[i].empty()) continue;
    record.round_wins[winners[i]] += 1;
    record.last_win_round[winners[i]] = static_cast<int>(i) + 1;
  }
  record.tournament_winner = DecideTournamentWinner(winners);
  record.draw = record.tournament_winner.empty();
}

}  // namespace

ValidityResolution ResolveValidity(const std::map<std::string, bool>& validity) {
  if (validity.empty()) {
    throw DataError("validity map must have one entry per player");
  }
  ValidityResolution resolution;
  for (const auto& [player, ok] : validity) {
    if (ok) resolution.participants.push_back(player);
  }
  if (resolution.participants.empty()) {
    resolution.disposition = Disposition::kAllInvalidTie;
  } else if (resolution.participants.size() == 1) {
    resolution.disposition = Disposition::kWalkover;
  } else {
    resolution.disposition = Disposition::kPlayed;
  }
  return resolution;
}

std::string DecideRoundWinner(const std::map<std::string, int>& sim_wins,
                              int ties) {
  if (sim_wins.empty()) throw DataError("no tally entries");
  int best = -1;
  std::string winner;
  bool shared = false;
  for (const auto& [player, wins] : sim_wins) {
    if (wins < 0) throw DataError("negative win count");
    if (wins > best) {
      best = wins;
      winner = player;
      shared = false;
    } else if (wins == best) {
      shared = true;
    }
  }
  if (shared || ties > best) return "";
  return winner;
}

std::string DecideTournamentWinner(
    const std::vector<std::string>& round_winners) {
  std::map<std::string, int> wins;
  std::map<std::string, int> last_win;
  for (std::size_t i = 0; i < round_winners.size(); ++i) {
    if (round_winners[i].empty()) continue;
    wins[round_winners[i]] += 1;
    last_win[round_winners[i]] = static_cast<int>(i) + 1;
  }
  if (wins.empty()) return "";  // every round tied: a draw
  int best = 0;
  for (const auto& [player, count] : wins) best = std::max(best, count);
  std::string winner;
  int latest = 0;
  for (const auto& [player, count] : wins) {
    if (count != best) continue;
    if (last_win[player] > latest) {
      latest = last_win[player];
      winner = player;
    }
  }
  return winner;
}

std::vector<std::string> ShuffleOrder(Rng& rng, std::vector<std::string> ids) {
  if (ids.empty()) throw DataError("cannot shuffle an empty player list");
  rng.Shuffle(ids);
  return ids;
}

std::uint64_t RoundMatchSeed(std::uint64_t master_seed, int round_index) {
  return DeriveSeed(master_seed,
                    {static_cast<std::uint64_t>(round_index), kMatchPurpose});
}

std::uint64_t RoundShuffleSeed(std::uint64_t master_seed, int round_index) {
  return DeriveSeed(master_seed,
                    {static_cast<std::uint64_t>(round_index), kShufflePurpose});
}

double RoundScore(int sim_wins, int ties, int sims) {
  return (static_cast<double>(sim_wins) + 0.5 * static_cast<double>(ties)) /
         static_cast<double>(sims) * 100.0;
}

std::string BuildTournamentId(const TournamentConfig& config) {
  std::string id = config.arena_id;
  id += ".r" + std::to_string(config.rounds);
  id += ".s" + std::to_string(config.sims_per_round);
  id += ".p" + std::to_string(config.players.size());
  for (const auto& p : config.players) id += "." + p.player_id;
  id += "." + (config.stamp.empty() ? NowStampUtc() : config.stamp);
  return id;
}

TournamentRecord RunTournament(const TournamentConfig& config,
                               const fs::path& out_dir) {
  ValidateConfig(config);
  if (!arena::IsArenaRegistered(config.arena_id)) {
    throw ConfigError("unknown arena: " + config.arena_id);
  }
  std::unique_ptr<arena::Arena> arena_impl =
      arena::MakeArena(config.arena_id, config.arena_args);
  const auto& descriptor = arena_impl->descriptor();
  if (static_cast<int>(config.players.size()) < descriptor.min_players ||
      static_cast<int>(config.players.size()) > descriptor.max_players) {
    throw ConfigError("arena " + config.arena_id + " supports " +
                      std::to_string(descriptor.min_players) + " to " +
                      std::to_string(descriptor.max_players) + " players");
  }
  for (const auto& p : config.players) {
    if (!fs::is_directory(p.workspace_template)) {
      throw ProvisionError("workspace template missing for " + p.player_id +
                           ": " + p.workspace_template.string());
    }
  }

  TournamentRecord record;
  record.tournament_id = BuildTournamentId(config);
  record.arena_id = config.arena_id;
  record.config_digest = ConfigDigest(config);
  record.sims_per_round = config.sims_per_round;
  record.master_seed = config.master_seed;
  for (const auto& p : config.players) record.players.push_back(p.player_id);

  fs::path results_dir = out_dir / record.tournament_id;
  if (fs::exists(results_dir)) {
    throw ProvisionError("results directory already exists: " +
                         results_dir.string());
  }
  fs::create_directories(results_dir);

  TournamentContext ctx;
  ctx.config = &config;
  ctx.arena = arena_impl.get();
  ctx.results_dir = results_dir;
  ctx.record = &record;
  for (const auto& p : config.players) {
    ctx.workspaces.push_back(sandbox::Provision(
        p.workspace_template, p.player_id, record.tournament_id,
        results_dir / "workspaces" / p.player_id));
  }

  // Round 0 manifests anchor the per-round file-event diffs.
  fs::path round0 = results_dir / sandbox::RoundDirName(0);
  fs::create_directories(round0);
  for (const auto& ws : ctx.workspaces) {
    sandbox::SaveManifest(sandbox::Snapshot(ws.root, 0),
                          round0 / ("manifest_" + ws.player_id + ".txt"));
  }

  // Per-round artifacts (tally, sim logs, manifests) are flushed as they
  // happen; the summary additionally lands on any engine-controlled abort.
  for (int round_index = 1; round_index <= config.rounds; ++round_index) {
    try {
      record.rounds.push_back(RunRound(ctx, round_index));
    } catch (const std::exception& e) {
      record.aborted_reason = e.what();
      FinishRecord(record);
      record.tournament_winner.clear();
      record.draw = false;
      WriteTournamentSummary(record, results_dir);
      throw;
    }
  }

  FinishRecord(record);
  WriteTournamentSummary(record, results_dir);
  return record;
}

}  // namespace codearena::engine
