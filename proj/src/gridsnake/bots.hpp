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

#ifndef CODEARENA_GRIDSNAKE_BOTS_HPP_
#define CODEARENA_GRIDSNAKE_BOTS_HPP_

#include <memory>
#include <optional>
#include <string>

#include "gridsnake/game.hpp"

namespace codearena::gridsnake {

struct MoveReply {
  std::optional<Direction> direction;  // nullopt: no legal move supplied
  long latency_ms = 0;
};

// One snake's controller for the duration of a game.
class SnakeBot {
 public:
  virtual ~SnakeBot() = default;
  // Handshake; empty string means the bot failed to come up.
  virtual std::string Hello() = 0;
  virtual MoveReply RequestMove(const GameState& state, int snake_index) = 0;
};

// Deterministic in-process baseline: seeks the nearest reachable food,
// avoids walls, bodies and losing head-to-heads, and falls back to the
// roomiest direction. Pure function of the game state and the salt; the
// salt varies the tie-break landscape per game so no board corner is
// systematically favored across simulations.
std::unique_ptr<SnakeBot> MakeGreedyBot(const std::string& name,
                                        std::uint64_t salt = 0);

// Uniformly random among non-suicidal moves; seeded.
std::unique_ptr<SnakeBot> MakeRandomBot(const std::string& name,
                                        std::uint64_t seed);

bool IsBuiltinBot(const std::string& builtin_name);
std::unique_ptr<SnakeBot> MakeBuiltinBot(const std::string& builtin_name,
                                         const std::string& label,
                                         std::uint64_t seed);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_BOTS_HPP_
