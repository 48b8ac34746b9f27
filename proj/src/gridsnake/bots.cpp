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

#include "gridsnake/bots.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <vector>

namespace codearena::gridsnake {

namespace {

constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kUp, Direction::kDown, Direction::kLeft, Direction::kRight};

struct BoardView {
  int width = 0;
  int height = 0;
  std::vector<char> blocked;  // body cells expected to be occupied next turn
  std::vector<char> danger;   // possible head cells of non-shorter opponents
  std::vector<char> food;

  int Index(Coord c) const { return c.y * width + c.x; }
  bool InBounds(Coord c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
};

bool FoodAdjacent(const GameState& state, Coord head) {
  for (Direction d : kAllDirections) {
    Coord c = Step(head, d);
    for (const Coord& f : state.food) {
      if (f == c) return true;
    }
  }
  return false;
}

BoardView BuildView(const GameState& state, int self_index) {
  BoardView view;
  view.width = state.config.width;
  view.height = state.config.height;
  view.blocked.assign(view.width * view.height, 0);
  view.danger.assign(view.width * view.height, 0);
  view.food.assign(view.width * view.height, 0);
  for (const Coord& f : state.food) view.food[view.Index(f)] = 1;

  const Snake& self = state.snakes[self_index];
  for (std::size_t i = 0; i < state.snakes.size(); ++i) {
    const Snake& snake = state.snakes[i];
    if (!snake.alive) continue;
    // Tails vacate unless the snake can eat this turn.
    bool tail_stays = FoodAdjacent(state, snake.head());
    std::size_t occupied =
        tail_stays ? snake.body.size() : snake.body.size() - 1;
    for (std::size_t k = 0; k < occupied; ++k) {
      view.blocked[view.Index(snake.body[k])] = 1;
    }
    if (static_cast<int>(i) != self_index &&
        snake.length() >= self.length()) {
      for (Direction d : kAllDirections) {
        Coord c = Step(snake.head(), d);
        if (view.InBounds(c)) view.danger[view.Index(c)] = 1;
      }
    }
  }
  return view;
}

int BfsFoodDistance(const BoardView& view, Coord start) {
  if (view.food[view.Index(start)]) return 0;
  std::vector<int> dist(view.width * view.height, -1);
  std::deque<Coord> queue;
  dist[view.Index(start)] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    Coord c = queue.front();
    queue.pop_front();
    for (Direction d : kAllDirections) {
      Coord n = Step(c, d);
      if (!view.InBounds(n)) continue;
      int idx = view.Index(n);
      if (dist[idx] >= 0 || view.blocked[idx]) continue;
      dist[idx] = dist[view.Index(c)] + 1;
      if (view.food[idx]) return dist[idx];
      queue.push_back(n);
    }
  }
  return std::numeric_limits<int>::max();
}

int FloodArea(const BoardView& view, Coord start) {
  std::vector<char> seen(view.width * view.height, 0);
  std::deque<Coord> queue;
  seen[view.Index(start)] = 1;
  queue.push_back(start);
  int area = 0;
  while (!queue.empty()) {
    Coord c = queue.front();
    queue.pop_front();
    ++area;
    for (Direction d : kAllDirections) {
      Coord n = Step(c, d);
      if (!view.InBounds(n)) continue;
      int idx = view.Index(n);
      if (seen[idx] || view.blocked[idx]) continue;
      seen[idx] = 1;
      queue.push_back(n);
    }
  }
  return area;
}

class GreedyBot : public SnakeBot {
 public:
  GreedyBot(std::string name, std::uint64_t salt)
      : name_(std::move(name)), salt_(salt) {}

  std::string Hello() override { return name_; }

  MoveReply RequestMove(const GameState& state, int snake_index) override {
    const Snake& self = state.snakes[snake_index];
    BoardView view = BuildView(state, snake_index);

    // Nearest opponent head, for retreat scoring when every move is risky.
    Coord nearest_head = self.head();
    int nearest_head_dist = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < state.snakes.size(); ++i) {
      const Snake& other = state.snakes[i];
      if (static_cast<int>(i) == snake_index || !other.alive) continue;
      int d = std::abs(other.head().x - self.head().x) +
              std::abs(other.head().y - self.head().y);
      if (d < nearest_head_dist) {
        nearest_head_dist = d;
        nearest_head = other.head();
      }
    }

    Direction best = Direction::kUp;
    bool found = false;
    std::uint64_t best_key[3] = {0, 0, 0};
    for (Direction d : kAllDirections) {
      Coord c = Step(self.head(), d);
      if (!view.InBounds(c) || view.blocked[view.Index(c)]) continue;
      int area = FloodArea(view, c);
      int dist = BfsFoodDistance(view, c);
      bool risky = view.danger[view.Index(c)] != 0;
      bool cramped = area < std::min(self.length(), 8);
      std::uint64_t tier = (risky ? 2u : 0u) + (cramped ? 1u : 0u);
      std::uint64_t primary;
      if (risky) {
        // Forced into contested territory: back away from the head that
        // contests it rather than racing for food.
        int away = std::abs(c.x - nearest_head.x) +
                   std::abs(c.y - nearest_head.y);
        primary = static_cast<std::uint64_t>(100 - std::min(away, 100));
      } else if (dist != std::numeric_limits<int>::max()) {
        primary = static_cast<std::uint64_t>(dist);
      } else {
        primary = static_cast<std::uint64_t>(100000 - area);
      }
      // Direction-neutral tie-break. Salted with the own head so two
      // identical bots in a symmetric stand-off do not deterministically
      // pick the same contested cell.
      std::uint64_t tie = MixBits(
          salt_ ^ (static_cast<std::uint64_t>(state.turn) << 40) ^
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 30) ^
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y)) << 20) ^
          (static_cast<std::uint64_t>(
               static_cast<std::uint32_t>(self.head().x))
           << 10) ^
          static_cast<std::uint64_t>(
              static_cast<std::uint32_t>(self.head().y)));
      std::uint64_t key[3] = {tier, primary, tie};
      if (!found || std::lexicographical_compare(key, key + 3, best_key,
                                                 best_key + 3)) {
        found = true;
        best = d;
        std::copy(key, key + 3, best_key);
      }
    }
    if (!found) {
      // Boxed in; any in-bounds cell loses more slowly than the wall.
      for (Direction d : kAllDirections) {
        if (view.InBounds(Step(self.head(), d))) {
          best = d;
          break;
        }
      }
    }
    return MoveReply{best, 0};
  }

 private:
  std::string name_;
  std::uint64_t salt_;
};

class RandomBot : public SnakeBot {
 public:
  RandomBot(std::string name, std::uint64_t seed)
      : name_(std::move(name)), rng_(seed) {}

  std::string Hello() override { return name_; }

  MoveReply RequestMove(const GameState& state, int snake_index) override {
    const Snake& self = state.snakes[snake_index];
    BoardView view = BuildView(state, snake_index);
    std::vector<Direction> open;
    for (Direction d : kAllDirections) {
      Coord c = Step(self.head(), d);
      if (view.InBounds(c) && !view.blocked[view.Index(c)]) open.push_back(d);
    }
    Direction pick =
        open.empty() ? Direction::kUp : open[rng_.UniformBelow(open.size())];
    return MoveReply{pick, 0};
  }

 private:
  std::string name_;
  Rng rng_;
};

}  // namespace

std::unique_ptr<SnakeBot> MakeGreedyBot(const std::string& name,
                                        std::uint64_t salt) {
  return std::make_unique<GreedyBot>(name, salt);
}

std::unique_ptr<SnakeBot> MakeRandomBot(const std::string& name,
                                        std::uint64_t seed) {
  return std::make_unique<RandomBot>(name, seed);
}

bool IsBuiltinBot(const std::string& builtin_name) {
  return builtin_name == "greedy" || builtin_name == "random";
}

std::unique_ptr<SnakeBot> MakeBuiltinBot(const std::string& builtin_name,
                                         const std::string& label,
                                         std::uint64_t seed) {
  if (builtin_name == "greedy") return MakeGreedyBot(label, seed);
  if (builtin_name == "random") return MakeRandomBot(label, seed);
  return nullptr;
}

}  // namespace codearena::gridsnake
