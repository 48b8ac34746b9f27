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

#include "gridsnake/runner.hpp"

#include "gridsnake/log.hpp"
#include "util/errors.hpp"

namespace codearena::gridsnake {

GameResult RunGame(const std::vector<std::string>& player_ids,
                   std::vector<std::unique_ptr<SnakeBot>>& bots,
                   const GameConfig& config, std::uint64_t seed,
                   std::vector<std::string>* log_lines) {
  if (bots.size() != player_ids.size()) {
    throw DataError("one bot per player required");
  }

  GameState state = InitGame(config, seed, player_ids);
  std::vector<bool> responsive(bots.size(), true);
  for (std::size_t i = 0; i < bots.size(); ++i) {
    if (bots[i] == nullptr || bots[i]->Hello().empty()) {
      responsive[i] = false;  // failed handshake: plays no moves
    }
  }

  GameResult result;
  std::map<std::string, long> latency;
  if (log_lines != nullptr) {
    log_lines->push_back(SnapshotLine(state, latency, {}));
  }

  while (state.AliveCount() > 1 && state.turn < config.max_turns) {
    std::map<std::string, Direction> moves;
    latency.clear();
    for (std::size_t i = 0; i < state.snakes.size(); ++i) {
      if (!state.snakes[i].alive || !responsive[i]) continue;
      MoveReply reply = bots[i]->RequestMove(state, static_cast<int>(i));
      latency[state.snakes[i].id] = reply.latency_ms;
      if (reply.direction) {
        moves[state.snakes[i].id] = *reply.direction;
      } else {
        responsive[i] = false;  // dead or silent process; snake forfeits
      }
    }
    std::vector<Elimination> eliminations = ApplyTurn(state, moves);
    for (const auto& e : eliminations) {
      result.eliminations[e.snake_id] = e.cause;
    }
    if (log_lines != nullptr) {
      log_lines->push_back(SnapshotLine(state, latency, eliminations));
    }
  }

  GameResult final = ResolveResult(state);
  final.eliminations = result.eliminations;
  return final;
}

}  // namespace codearena::gridsnake
