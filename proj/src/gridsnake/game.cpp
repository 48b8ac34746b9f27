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

#include "gridsnake/game.hpp"

#include <algorithm>

#include "util/errors.hpp"

namespace codearena::gridsnake {

std::optional<Direction> DirectionFromString(const std::string& s) {
  if (s == "up") return Direction::kUp;
  if (s == "down") return Direction::kDown;
  if (s == "left") return Direction::kLeft;
  if (s == "right") return Direction::kRight;
  return std::nullopt;
}

std::string DirectionToString(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
  }
  return "up";
}

Coord Step(Coord from, Direction d) {
  switch (d) {
    case Direction::kUp: return {from.x, from.y + 1};
    case Direction::kDown: return {from.x, from.y - 1};
    case Direction::kLeft: return {from.x - 1, from.y};
    case Direction::kRight: return {from.x + 1, from.y};
  }
  return from;
}

std::string EliminationCauseToString(EliminationCause cause) {
  switch (cause) {
    case EliminationCause::kOutOfBounds: return "OUT_OF_BOUNDS";
    case EliminationCause::kSelfCollision: return "SELF_COLLISION";
    case EliminationCause::kBodyCollision: return "BODY_COLLISION";
    case EliminationCause::kHeadToHead: return "HEAD_TO_HEAD";
    case EliminationCause::kStarvation: return "STARVATION";
  }
  return "UNKNOWN";
}

int GameState::AliveCount() const {
  int count = 0;
  for (const auto& s : snakes) {
    if (s.alive) ++count;
  }
  return count;
}

namespace {

bool InBounds(const GameConfig& config, Coord c) {
  return c.x >= 0 && c.x < config.width && c.y >= 0 && c.y < config.height;
}

bool HasFoodAt(const GameState& state, Coord c) {
  return std::find(state.food.begin(), state.food.end(), c) !=
         state.food.end();
}

// Row-major list of in-bounds cells carrying neither food nor any part of
// a living snake.
std::vector<Coord> FreeCells(const GameState& state) {
  std::vector<Coord> free;
  for (int y = 0; y < state.config.height; ++y) {
    for (int x = 0; x < state.config.width; ++x) {
      Coord c{x, y};
      bool occupied = HasFoodAt(state, c);
      for (const auto& snake : state.snakes) {
        if (occupied) break;
        if (!snake.alive) continue;
        occupied = std::find(snake.body.begin(), snake.body.end(), c) !=
                   snake.body.end();
      }
      if (!occupied) free.push_back(c);
    }
  }
  return free;
}

void SpawnOnePellet(GameState& state) {
  std::vector<Coord> free = FreeCells(state);
  if (free.empty()) return;
  state.food.push_back(free[state.rng.UniformBelow(free.size())]);
}

}  // namespace

GameState InitGame(const GameConfig& config, std::uint64_t seed,
                   const std::vector<std::string>& player_ids) {
  if (config.width < 7 || config.height < 7) {
    throw ConfigError("board must be at least 7x7");
  }
  if (config.start_length < 1) throw ConfigError("start_length must be >= 1");
  if (config.food_spawn_chance < 0.0 || config.food_spawn_chance > 1.0) {
    throw ConfigError("food_spawn_chance must be in [0, 1]");
  }
  if (player_ids.size() < 2 || player_ids.size() > 4) {
    throw ConfigError("GridSnake supports 2 to 4 snakes");
  }

  const int w = config.width;
  const int h = config.height;
  const Coord quadrant_cells[4] = {
      {2, 2}, {w - 3, h - 3}, {2, h - 3}, {w - 3, 2}};

  GameState state;
  state.config = config;
  state.rng = Rng(seed);
  for (std::size_t i = 0; i < player_ids.size(); ++i) {
    Snake snake;
    snake.id = player_ids[i];
    snake.name = player_ids[i];
    snake.health = config.start_health;
    snake.body.assign(config.start_length, quadrant_cells[i]);
    state.snakes.push_back(std::move(snake));
  }
  SpawnFood(state);
  return state;
}

void SpawnFood(GameState& state) {
  while (static_cast<int>(state.food.size()) < state.config.min_food) {
    std::size_t before = state.food.size();
    SpawnOnePellet(state);
    if (state.food.size() == before) return;  // board full
  }
  if (state.rng.Bernoulli(state.config.food_spawn_chance)) {
    SpawnOnePellet(state);
  }
}

std::vector<Elimination> ApplyTurn(
    GameState& state, const std::map<std::string, Direction>& moves) {
  if (state.AliveCount() == 0) {
    throw DataError("no living snakes to move");
  }

  // Move phase: compute heads, feed, shrink or grow.
  std::vector<Coord> eaten;
  std::vector<std::string> forfeited;
  for (auto& snake : state.snakes) {
    if (!snake.alive) continue;
    auto it = moves.find(snake.id);
    Coord proposed;
    if (it != moves.end()) {
      proposed = Step(snake.head(), it->second);
    } else {
      // No legal move supplied: resolved as stepping onto the own neck.
      // The collision rules catch that for bodies of 3+; shorter snakes
      // are eliminated explicitly below so a silent bot never survives.
      proposed = snake.length() > 1 ? snake.body[1] : snake.head();
      forfeited.push_back(snake.id);
    }
    bool fed = InBounds(state.config, proposed) && HasFoodAt(state, proposed);
    snake.body.insert(snake.body.begin(), proposed);
    if (fed) {
      snake.health = state.config.start_health;
      eaten.push_back(proposed);
    } else {
      snake.body.pop_back();
      snake.health -= 1;
    }
  }
  for (const Coord& c : eaten) {
    state.food.erase(std::remove(state.food.begin(), state.food.end(), c),
                     state.food.end());
  }

  // Elimination phase, evaluated simultaneously against the post-move
  // configuration of every snake that started the turn alive.
  std::vector<Elimination> eliminations;
  std::vector<Snake*> movers;
  for (auto& snake : state.snakes) {
    if (snake.alive) movers.push_back(&snake);
  }
  auto eliminate = [&](Snake* snake, EliminationCause cause) {
    eliminations.push_back({snake->id, cause});
  };
  for (Snake* snake : movers) {
    if (snake->health <= 0) {
      eliminate(snake, EliminationCause::kStarvation);
      continue;
    }
    if (!InBounds(state.config, snake->head())) {
      eliminate(snake, EliminationCause::kOutOfBounds);
      continue;
    }
    bool done = false;
    for (std::size_t k = 1; k < snake->body.size() && !done; ++k) {
      if (snake->body[k] == snake->head()) {
        eliminate(snake, EliminationCause::kSelfCollision);
        done = true;
      }
    }
    if (done) continue;
    for (Snake* other : movers) {
      if (done || other == snake) continue;
      for (std::size_t k = 1; k < other->body.size() && !done; ++k) {
        if (other->body[k] == snake->head()) {
          eliminate(snake, EliminationCause::kBodyCollision);
          done = true;
        }
      }
    }
    if (done) continue;
    for (Snake* other : movers) {
      if (other == snake) continue;
      if (other->head() == snake->head() &&
          other->length() >= snake->length()) {
        eliminate(snake, EliminationCause::kHeadToHead);
        break;
      }
    }
  }
  for (const std::string& id : forfeited) {
    bool already = false;
    for (const auto& e : eliminations) {
      if (e.snake_id == id) already = true;
    }
    if (!already) eliminations.push_back({id, EliminationCause::kSelfCollision});
  }
  for (const auto& e : eliminations) {
    for (auto& snake : state.snakes) {
      if (snake.id == e.snake_id) snake.alive = false;
    }
  }

  SpawnFood(state);
  state.turn += 1;
  return eliminations;
}

GameResult ResolveResult(const GameState& state) {
  GameResult result;
  result.turns = state.turn;
  for (const auto& snake : state.snakes) {
    result.final_length[snake.id] = snake.length();
  }
  std::vector<const Snake*> alive;
  for (const auto& snake : state.snakes) {
    if (snake.alive) alive.push_back(&snake);
  }
  if (alive.size() == 1) {
    result.winner = alive[0]->id;
    return result;
  }
  if (alive.empty()) return result;  // simultaneous elimination: tie
  int best = 0;
  for (const Snake* s : alive) best = std::max(best, s->length());
  const Snake* leader = nullptr;
  bool shared = false;
  for (const Snake* s : alive) {
    if (s->length() == best) {
      shared = leader != nullptr;
      leader = s;
    }
  }
  if (!shared && leader != nullptr) result.winner = leader->id;
  return result;
}

}  // namespace codearena::gridsnake
