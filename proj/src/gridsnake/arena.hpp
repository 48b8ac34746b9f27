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

#ifndef CODEARENA_GRIDSNAKE_ARENA_HPP_
#define CODEARENA_GRIDSNAKE_ARENA_HPP_

#include <map>
#include <string>

#include "arena/arena.hpp"
#include "gridsnake/game.hpp"

namespace codearena::gridsnake {

// Grid-survival arena. The submission contract is a bot.txt whose first
// non-empty line is either "builtin:<name>" (in-process baseline bot) or
// a shell command spawned per game, speaking the stdio JSON protocol.
class GridSnakeArena : public arena::Arena {
 public:
  explicit GridSnakeArena(const std::map<std::string, std::string>& args);

  const arena::ArenaDescriptor& descriptor() const override {
    return descriptor_;
  }
  arena::ValidationReport Validate(
      const std::filesystem::path& workspace_root) const override;
  arena::SimOutcome RunSimulation(
      const std::vector<arena::Participant>& participants, std::uint64_t seed,
      const std::filesystem::path& log_path) const override;

  const GameConfig& game_config() const { return config_; }

 private:
  arena::ArenaDescriptor descriptor_;
  GameConfig config_;
};

GameConfig GameConfigFromArgs(const std::map<std::string, std::string>& args);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_ARENA_HPP_
