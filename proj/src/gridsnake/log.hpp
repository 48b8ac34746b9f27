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

#ifndef CODEARENA_GRIDSNAKE_LOG_HPP_
#define CODEARENA_GRIDSNAKE_LOG_HPP_

#include <map>
#include <string>
#include <vector>

#include "gridsnake/game.hpp"

namespace codearena::gridsnake {

// One turn-log line: a full snapshot of the board in the wire schema
// ({"turn": n, "board": {"height", "width", "snakes", "food"}}, per-snake
// id/name/latency/health/body/head/length plus cosmetic fields). Turns
// with deaths carry an extra "eliminations" list.
std::string SnapshotLine(const GameState& state,
                         const std::map<std::string, long>& latency_ms,
                         const std::vector<Elimination>& eliminations);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_LOG_HPP_
