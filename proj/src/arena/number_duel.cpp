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

#include "arena/number_duel.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::arena {

namespace {

constexpr std::int64_t kMoveLimit = 1ll << 31;

std::optional<std::int64_t> ReadMove(const std::filesystem::path& root) {
  auto value = ParseInt(ReadFileOrThrow(root / "move.txt"));
  if (!value || *value < 0 || *value >= kMoveLimit) return std::nullopt;
  return value;
}

}  // namespace

NumberDuelArena::NumberDuelArena() {
  descriptor_.arena_id = "NumberDuel";
  descriptor_.min_players = 2;
  descriptor_.max_players = 8;
  descriptor_.validation_rules =
      "move.txt contains a base-10 integer in [0, 2^31)";
  descriptor_.log_format = "txt";
  descriptor_.log_extension = "txt";
  descriptor_.solution_file = "move.txt";
}

ValidationReport NumberDuelArena::Validate(
    const std::filesystem::path& workspace_root) const {
  if (!std::filesystem::exists(workspace_root)) {
    throw InfraError("workspace unreadable: " + workspace_root.string());
  }
  if (!std::filesystem::is_regular_file(workspace_root / "move.txt")) {
    return {false, "entrypoint missing"};
  }
  auto value = ParseInt(ReadFileOrThrow(workspace_root / "move.txt"));
  if (!value) return {false, "unparsable"};
  if (*value < 0 || *value >= kMoveLimit) return {false, "out of range"};
  return {true, ""};
}

SimOutcome NumberDuelArena::RunSimulation(
    const std::vector<Participant>& participants, std::uint64_t /*seed*/,
    const std::filesystem::path& log_path) const {
  SimOutcome outcome;
  std::int64_t best = -1;
  bool shared_best = false;
  std::ostringstream log;
  for (const auto& p : participants) {
    auto move = ReadMove(p.workspace_root);
    if (!move) {
      // Validation runs first in the engine; reaching this means the file
      // changed underneath us.
      throw InfraError("invalid move.txt during simulation for " +
                       p.player_id);
    }
    outcome.raw_score[p.player_id] = static_cast<double>(*move);
    log << p.player_id << '=' << *move << ' ';
    if (*move > best) {
      best = *move;
      outcome.winner = p.player_id;
      shared_best = false;
    } else if (*move == best) {
      shared_best = true;
    }
  }
  if (shared_best) outcome.winner.clear();
  log << "winner=" << (outcome.winner.empty() ? "TIE" : outcome.winner) << '\n';
  WriteFileOrThrow(log_path, log.str());
  outcome.log_path = log_path;
  return outcome;
}

}  // namespace codearena::arena
