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

#include <memory>

#include "arena/arena.hpp"
#include "arena/number_duel.hpp"
#include "gridsnake/arena.hpp"
#include "util/errors.hpp"

namespace codearena::arena {

void RegisterBuiltinArenas() {
  RegisterArena("NumberDuel", [](const std::map<std::string, std::string>& args) {
    if (!args.empty()) {
      throw ConfigError("NumberDuel takes no arena args");
    }
    return std::make_unique<NumberDuelArena>();
  });
  RegisterArena("GridSnake", [](const std::map<std::string, std::string>& args)
                    -> std::unique_ptr<Arena> {
    return std::make_unique<gridsnake::GridSnakeArena>(args);
  });
}

}  // namespace codearena::arena
