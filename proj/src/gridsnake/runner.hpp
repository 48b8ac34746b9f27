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

#ifndef CODEARENA_GRIDSNAKE_RUNNER_HPP_
#define CODEARENA_GRIDSNAKE_RUNNER_HPP_

#include <memory>
#include <string>
#include <vector>

#include "gridsnake/bots.hpp"
#include "gridsnake/game.hpp"

namespace codearena::gridsnake {

// Plays one seeded game to completion. Bots are indexed like player_ids;
// a bot that fails its handshake or stops answering simply loses its
// snake, never the game loop. The turn log (one snapshot line per turn,
// including turn 0) is appended to log_lines when provided.
GameResult RunGame(const std::vector<std::string>& player_ids,
                   std::vector<std::unique_ptr<SnakeBot>>& bots,
                   const GameConfig& config, std::uint64_t seed,
                   std::vector<std::string>* log_lines);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_RUNNER_HPP_
