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

#include "gridsnake/arena.hpp"

#include <sstream>

#include "gridsnake/protocol.hpp"
#include "gridsnake/runner.hpp"
#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::gridsnake {

namespace {

constexpr const char* kEntrypoint = "bot.txt";
constexpr const char* kBuiltinPrefix = "builtin:";

std::string FirstNonEmptyLine(const std::string& text) {
  for (const auto& line : SplitString(text, '\n')) {
    std::string trimmed = TrimWhitespace(line);
    if (!trimmed.empty()) return trimmed;
  }
  return "";
}

}  // namespace

GameConfig GameConfigFromArgs(const std::map<std::string, std::string>& args) {
  GameConfig config;
  for (const auto& [key, value] : args) {
    if (key == "width" || key == "height" || key == "max_turns" ||
        key == "start_length" || key == "start_health" || key == "min_food" ||
        key == "move_timeout_ms") {
      auto parsed = ParseInt(value);
      if (!parsed) {
        throw ConfigError("GridSnake arg " + key + " is not an integer: " +
                          value);
      }
      int v = static_cast<int>(*parsed);
      if (key == "width") config.width = v;
      else if (key == "height") config.height = v;
      else if (key == "max_turns") config.max_turns = v;
      else if (key == "start_length") config.start_length = v;
      else if (key == "start_health") config.start_health = v;
      else if (key == "min_food") config.min_food = v;
      else config.move_timeout_ms = v;
    } else if (key == "food_spawn_chance") {
      auto parsed = ParseDouble(value);
      if (!parsed) {
        throw ConfigError("GridSnake arg food_spawn_chance is not a number: " +
                          value);
      }
      config.food_spawn_chance = *parsed;
    } else {
      throw ConfigError("unknown GridSnake arg: " + key);
    }
  }
  if (config.width < 7 || config.height < 7) {
    throw ConfigError("GridSnake board must be at least 7x7");
  }
  if (config.max_turns < 1) throw ConfigError("max_turns must be positive");
  if (config.food_spawn_chance < 0.0 || config.food_spawn_chance > 1.0) {
    throw ConfigError("food_spawn_chance must be in [0, 1]");
  }
  return config;
}

GridSnakeArena::GridSnakeArena(const std::map<std::string, std::string>& args)
    : config_(GameConfigFromArgs(args)) {
  descriptor_.arena_id = "GridSnake";
  descriptor_.min_players = 2;
  descriptor_.max_players = 4;
  descriptor_.validation_rules =
      "bot.txt names a builtin bot (builtin:<name>) or a command speaking "
      "the stdio JSON protocol";
  descriptor_.log_format = "jsonl";
  descriptor_.log_extension = "jsonl";
  descriptor_.solution_file = "main.py";
}

arena::ValidationReport GridSnakeArena::Validate(
    const std::filesystem::path& workspace_root) const {
  if (!std::filesystem::exists(workspace_root)) {
    throw InfraError("workspace unreadable: " + workspace_root.string());
  }
  auto entry = workspace_root / kEntrypoint;
  if (!std::filesystem::is_regular_file(entry)) {
    return {false, "entrypoint missing"};
  }
  std::string command = FirstNonEmptyLine(ReadFileOrThrow(entry));
  if (command.empty()) return {false, "empty command"};
  if (command.rfind(kBuiltinPrefix, 0) == 0) {
    std::string name = command.substr(std::string(kBuiltinPrefix).size());
    if (!IsBuiltinBot(name)) return {false, "unknown builtin bot: " + name};
  }
  return {true, ""};
}

arena::SimOutcome GridSnakeArena::RunSimulation(
    const std::vector<arena::Participant>& participants, std::uint64_t seed,
    const std::filesystem::path& log_path) const {
  std::vector<std::string> ids;
  std::vector<std::unique_ptr<SnakeBot>> bots;
  for (std::size_t i = 0; i < participants.size(); ++i) {
    const auto& p = participants[i];
    ids.push_back(p.player_id);
    std::string command =
        FirstNonEmptyLine(ReadFileOrThrow(p.workspace_root / kEntrypoint));
    if (command.rfind(kBuiltinPrefix, 0) == 0) {
      std::string name = command.substr(std::string(kBuiltinPrefix).size());
      bots.push_back(MakeBuiltinBot(
          name, p.player_id,
          DeriveSeed(seed, {0x626f74ull, static_cast<std::uint64_t>(i)})));
      if (bots.back() == nullptr) {
        throw InfraError("unknown builtin bot surfaced at simulation time: " +
                         name);
      }
    } else {
      bots.push_back(
          MakeSubprocessBot(p.workspace_root, command, config_.move_timeout_ms));
    }
  }

  std::vector<std::string> lines;
  GameResult result = RunGame(ids, bots, config_, seed, &lines);

  std::ostringstream log;
  for (const auto& line : lines) log << line << '\n';
  WriteFileOrThrow(log_path, log.str());

  arena::SimOutcome outcome;
  outcome.winner = result.winner;
  outcome.log_path = log_path;
  for (const auto& [id, length] : result.final_length) {
    outcome.raw_score[id] = static_cast<double>(length);
  }
  return outcome;
}

}  // namespace codearena::gridsnake
