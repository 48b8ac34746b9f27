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

#include "gridsnake/log.hpp"

#include <json.hpp>

namespace codearena::gridsnake {

namespace {

using Json = nlohmann::ordered_json;

Json CoordJson(const Coord& c) { return Json{{"x", c.x}, {"y", c.y}}; }

}  // namespace

std::string SnapshotLine(const GameState& state,
                         const std::map<std::string, long>& latency_ms,
                         const std::vector<Elimination>& eliminations) {
  Json board;
  board["height"] = state.config.height;
  board["width"] = state.config.width;
  board["snakes"] = Json::array();
  for (const auto& snake : state.snakes) {
    if (!snake.alive) continue;
    Json body = Json::array();
    for (const auto& c : snake.body) body.push_back(CoordJson(c));
    long latency = 0;
    auto it = latency_ms.find(snake.id);
    if (it != latency_ms.end()) latency = it->second;
    Json entry;
    entry["id"] = snake.id;
    entry["name"] = snake.name;
    entry["latency"] = std::to_string(latency);
    entry["health"] = snake.health;
    entry["body"] = std::move(body);
    entry["head"] = CoordJson(snake.head());
    entry["length"] = snake.length();
    entry["shout"] = "";
    entry["squad"] = "";
    entry["customizations"] = Json{
        {"color", "#888888"}, {"head", "default"}, {"tail", "default"}};
    board["snakes"].push_back(std::move(entry));
  }
  board["food"] = Json::array();
  for (const auto& f : state.food) board["food"].push_back(CoordJson(f));

  Json line;
  line["turn"] = state.turn;
  line["board"] = std::move(board);
  if (!eliminations.empty()) {
    Json elim = Json::array();
    for (const auto& e : eliminations) {
      elim.push_back(Json{{"id", e.snake_id},
                          {"cause", EliminationCauseToString(e.cause)}});
    }
    line["eliminations"] = std::move(elim);
  }
  return line.dump();
}

}  // namespace codearena::gridsnake
