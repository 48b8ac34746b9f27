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

#include "engine/records_io.hpp"

#include <algorithm>
#include <sstream>

#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::engine {

namespace {

constexpr const char* kSummaryName = "tournament.txt";

std::string WinnerToken(const std::string& winner, bool tournament_level) {
  if (!winner.empty()) return winner;
  return tournament_level ? "DRAW" : "TIE";
}

std::string JoinIds(const std::vector<std::string>& ids, char delim) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += delim;
    out += id;
  }
  return out;
}

// "a:1,b:2" per-player fields inside a round line, ordered by the
// record's player list.
template <typename T, typename Fmt>
std::string JoinPlayerField(const std::vector<std::string>& players,
                            const std::map<std::string, T>& values,
                            Fmt format) {
  std::string out;
  for (const auto& p : players) {
    auto it = values.find(p);
    if (it == values.end()) continue;
    if (!out.empty()) out += ',';
    out += p + ":" + format(it->second);
  }
  return out;
}

// "a=1 b=2" top-level maps.
template <typename T, typename Fmt>
std::string JoinTopMap(const std::vector<std::string>& players,
                       const std::map<std::string, T>& values, Fmt format) {
  std::string out;
  for (const auto& p : players) {
    auto it = values.find(p);
    if (it == values.end()) continue;
    if (!out.empty()) out += ' ';
    out += p + "=" + format(it->second);
  }
  return out;
}

std::map<std::string, std::string> ParseSpacedPairs(const std::string& text) {
  std::map<std::string, std::string> pairs;
  for (const auto& part : SplitString(text, ' ')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) continue;
    pairs[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return pairs;
}

std::map<std::string, std::string> ParsePlayerField(const std::string& text) {
  std::map<std::string, std::string> pairs;
  for (const auto& part : SplitString(text, ',')) {
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos) continue;
    pairs[part.substr(0, colon)] = part.substr(colon + 1);
  }
  return pairs;
}

}  // namespace

std::string DispositionToString(Disposition d) {
  switch (d) {
    case Disposition::kPlayed: return "PLAYED";
    case Disposition::kWalkover: return "WALKOVER";
    case Disposition::kAllInvalidTie: return "ALL_INVALID_TIE";
  }
  return "PLAYED";
}

std::optional<Disposition> DispositionFromString(const std::string& s) {
  if (s == "PLAYED") return Disposition::kPlayed;
  if (s == "WALKOVER") return Disposition::kWalkover;
  if (s == "ALL_INVALID_TIE") return Disposition::kAllInvalidTie;
  return std::nullopt;
}

std::string TournamentSummaryText(const TournamentRecord& record) {
  std::ostringstream out;
  out << "tournament_id: " << record.tournament_id << '\n';
  out << "arena: " << record.arena_id << '\n';
  out << "config_digest: " << record.config_digest << '\n';
  out << "rounds: " << record.rounds.size() << '\n';
  out << "sims_per_round: " << record.sims_per_round << '\n';
  out << "master_seed: " << record.master_seed << '\n';
  out << "players: " << JoinIds(record.players, ' ') << '\n';
  if (!record.aborted_reason.empty()) {
    out << "aborted: " << record.aborted_reason << '\n';
  } else {
    out << "tournament_winner: "
        << WinnerToken(record.tournament_winner, true) << '\n';
  }
  out << "round_wins: "
      << JoinTopMap(record.players, record.round_wins,
                    [](int v) { return std::to_string(v); })
      << '\n';
  out << "last_win_round: "
      << JoinTopMap(record.players, record.last_win_round,
                    [](int v) { return std::to_string(v); })
      << '\n';
  for (const auto& round : record.rounds) {
    out << "round " << PadInt(round.round_index, 2) << ":";
    out << " order=" << JoinIds(round.player_order, ',');
    out << " validity="
        << JoinPlayerField(record.players, round.validity, [](bool v) {
             return std::string(v ? "ok" : "invalid");
           });
    out << " disposition=" << DispositionToString(round.disposition);
    out << " wins="
        << JoinPlayerField(record.players, round.sim_wins,
                           [](int v) { return std::to_string(v); });
    out << " ties=" << round.ties;
    out << " score="
        << JoinPlayerField(record.players, round.score,
                           [](double v) { return FormatFixed(v, 2); });
    out << " winner=" << WinnerToken(round.round_winner, false);
    out << '\n';
  }
  return out.str();
}

void WriteTournamentSummary(const TournamentRecord& record,
                            const std::filesystem::path& results_dir) {
  WriteFileOrThrow(results_dir / kSummaryName, TournamentSummaryText(record));
}

std::string RoundTallyText(const RoundRecord& round, int sims_per_round) {
  std::ostringstream out;
  out << "round: " << round.round_index << '\n';
  out << "order: " << JoinIds(round.player_order, ' ') << '\n';
  out << "disposition: " << DispositionToString(round.disposition) << '\n';
  for (const auto& [player, ok] : round.validity) {
    out << "validity: " << player << '=' << (ok ? "ok" : "invalid");
    if (!ok) {
      auto reason = round.invalid_reason.find(player);
      if (reason != round.invalid_reason.end()) {
        out << " (" << reason->second << ')';
      }
    }
    out << '\n';
  }
  out << "sims: " << sims_per_round << '\n';
  for (const auto& [player, wins] : round.sim_wins) {
    out << "wins: " << player << '=' << wins << '\n';
  }
  out << "ties: " << round.ties << '\n';
  for (const auto& [player, score] : round.score) {
    out << "score: " << player << '=' << FormatFixed(score, 2) << '\n';
  }
  out << "winner: " << WinnerToken(round.round_winner, false) << '\n';
  return out.str();
}

namespace {

RoundRecord ParseRoundLine(const std::string& index_text,
                           const std::string& body, int line_number) {
  auto bad = [&](const std::string& what) {
    return DataError("summary line " + std::to_string(line_number) + ": " +
                     what);
  };
  RoundRecord round;
  auto index = ParseInt(index_text);
  if (!index) throw bad("bad round index");
  round.round_index = static_cast<int>(*index);

  auto fields = ParseSpacedPairs(body);
  auto need = [&](const char* key) -> std::string {
    auto it = fields.find(key);
    if (it == fields.end()) throw bad(std::string("missing ") + key);
    return it->second;
  };

  round.player_order = SplitString(need("order"), ',');
  for (const auto& [player, v] : ParsePlayerField(need("validity"))) {
    round.validity[player] = v == "ok";
  }
  auto disposition = DispositionFromString(need("disposition"));
  if (!disposition) throw bad("bad disposition");
  round.disposition = *disposition;
  for (const auto& [player, v] : ParsePlayerField(need("wins"))) {
    auto parsed = ParseInt(v);
    if (!parsed) throw bad("bad wins entry");
    round.sim_wins[player] = static_cast<int>(*parsed);
  }
  auto ties = ParseInt(need("ties"));
  if (!ties) throw bad("bad ties");
  round.ties = static_cast<int>(*ties);
  for (const auto& [player, v] : ParsePlayerField(need("score"))) {
    auto parsed = ParseDouble(v);
    if (!parsed) throw bad("bad score entry");
    round.score[player] = *parsed;
  }
  std::string winner = need("winner");
  round.round_winner = winner == "TIE" ? "" : winner;
  round.log_dir = "round_" + PadInt(round.round_index, 2);
  return round;
}

}  // namespace

TournamentRecord ReadTournamentSummary(const std::filesystem::path& file) {
  TournamentRecord record;
  std::string text = ReadFileOrThrow(file);
  int line_number = 0;
  for (const auto& raw : SplitString(text, '\n')) {
    ++line_number;
    std::string line = TrimWhitespace(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw DataError(file.string() + " line " + std::to_string(line_number) +
                      ": expected key: value");
    }
    std::string key = line.substr(0, colon);
    std::string value = TrimWhitespace(line.substr(colon + 1));
    if (key == "tournament_id") {
      record.tournament_id = value;
    } else if (key == "arena") {
      record.arena_id = value;
    } else if (key == "config_digest") {
      record.config_digest = value;
    } else if (key == "sims_per_round") {
      auto v = ParseInt(value);
      if (!v) throw DataError("bad sims_per_round in " + file.string());
      record.sims_per_round = static_cast<int>(*v);
    } else if (key == "master_seed") {
      auto v = ParseInt(value);
      if (!v) throw DataError("bad master_seed in " + file.string());
      record.master_seed = static_cast<std::uint64_t>(*v);
    } else if (key == "players") {
      for (const auto& id : SplitString(value, ' ')) {
        if (!id.empty()) record.players.push_back(id);
      }
    } else if (key == "tournament_winner") {
      record.draw = value == "DRAW";
      record.tournament_winner = record.draw ? "" : value;
    } else if (key == "aborted") {
      record.aborted_reason = value;
    } else if (key == "round_wins") {
      for (const auto& [player, count] : ParseSpacedPairs(value)) {
        auto v = ParseInt(count);
        if (!v) throw DataError("bad round_wins in " + file.string());
        record.round_wins[player] = static_cast<int>(*v);
      }
    } else if (key == "last_win_round") {
      for (const auto& [player, count] : ParseSpacedPairs(value)) {
        auto v = ParseInt(count);
        if (!v) throw DataError("bad last_win_round in " + file.string());
        record.last_win_round[player] = static_cast<int>(*v);
      }
    } else if (key == "rounds") {
      // implied by the per-round lines
    } else if (key.rfind("round ", 0) == 0) {
      record.rounds.push_back(
          ParseRoundLine(key.substr(6), value, line_number));
    } else {
      throw DataError(file.string() + " line " + std::to_string(line_number) +
                      ": unknown key '" + key + "'");
    }
  }
  if (record.tournament_id.empty() || record.players.empty()) {
    throw DataError(file.string() + ": incomplete tournament summary");
  }
  return record;
}

std::vector<std::filesystem::path> FindResultsDirs(
    const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> dirs;
  if (fs::is_regular_file(path / kSummaryName)) {
    dirs.push_back(path);
    return dirs;
  }
  if (!fs::is_directory(path)) return dirs;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_directory() &&
        fs::is_regular_file(entry.path() / kSummaryName)) {
      dirs.push_back(entry.path());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace codearena::engine
