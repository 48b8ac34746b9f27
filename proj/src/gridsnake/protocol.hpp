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

#ifndef CODEARENA_GRIDSNAKE_PROTOCOL_HPP_
#define CODEARENA_GRIDSNAKE_PROTOCOL_HPP_

#include <filesystem>
#include <memory>
#include <string>

#include "gridsnake/bots.hpp"

namespace codearena::gridsnake {

// Bot speaking newline-delimited JSON on its stdio, one process per game:
//   engine -> bot  {"type":"hello"}
//   bot -> engine  {"name":"<label>"}
//   engine -> bot  {"type":"move_request","you":"<snake id>","state":{...}}
//   bot -> engine  {"move":"up"|"down"|"left"|"right"}
// Missing, late or malformed replies cost the snake its move; a dead
// process forfeits the rest of the game.
std::unique_ptr<SnakeBot> MakeSubprocessBot(
    const std::filesystem::path& workspace_root, const std::string& command,
    int move_timeout_ms);

}  // namespace codearena::gridsnake

#endif  // CODEARENA_GRIDSNAKE_PROTOCOL_HPP_
