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

#ifndef CODEARENA_GRIDSNAKE_GAME_HPP_
#define CODEARENA_GRIDSNAKE_GAME_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "util/rng.hpp"

namespace codearena::gridsnake {

enum class Direction { kUp, kDown, kLeft, kRight };

std::optional<Direction> DirectionFromString(const std::string& s);
std::string DirectionToString(Direction d);

// Board coordinates: origin bottom-left, y grows upward.
struct Coord {
  int x = 0;
  int y = 0;
  bool operator==(const Coord&) const = default;
};

Coord Step(Coord from, Direction d);

struct GameConfig {
  int width = 11;
  int height = 11;
  int max_turns = 500;
  int start_length = 3;
  int start_health = 100;
  double food_spawn_chance = 0.15;
  int min_food = 1;
  int move_timeout_ms = 500;
};

enum class EliminationCause {
  kOutOfBounds,
  kSelfCollision,
  kBodyCollision,
  kHeadToHead,
  kStarvation,
};

std::string EliminationCauseToString(EliminationCause cause);

struct Snake {
  std::string id;
  std::string name;
  int health = 0;
  std::vector<Coord> body;  // head first
  bool alive = true;

  const Coord& head() const { return body.front(); }
  int length() const { return static_cast<int>(body.size()); }
};

struct GameState {
  GameConfig config;
  int turn = 0;
  std::vector<Snake> snakes;
  std::vector<Coord> food;
  Rng rng{0};

  int AliveCount() const;
};

struct Elimination {
  std::string snake_id;
  EliminationCause cause;
};

// Snakes spawn stacked on fixed quadrant cells, in the given (already
// shuffled) player order, with full health; the food floor is then
// established. 2 to 4 players.
GameState InitGame(const GameConfig& config, std::uint64_t seed,
                   const std::vector<std::string>& player_ids);

// Simultaneous move resolution: new heads, tail pop unless fed (feeding
// restores full health and grows by one), health decrement otherwise,
// then eliminations against the post-move configuration, food respawn,
// turn increment. A missing move entry for a living snake is resolved as
// a move onto its own neck.
std::vector<Elimination> ApplyTurn(
    GameState& state, const std::map<std::string, Direction>& moves);

// Tops food up to min_food, otherwise spawns one pellet with the
// configured probability; uniform over free cells, no-op on a full board.
void SpawnFood(GameState& state);

struct GameResult {
  std::string winner;  // empty = tie
  int turns = 0;
  std::map<std::string, EliminationCause> eliminations;
  std::map<std::string, int> final_length;
};

// End-of-game tie-break ladder at the turn limit: alive count, then
// length, then tie.
GameResult ResolveResult(const GameState& state);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_GAME_HPP_
