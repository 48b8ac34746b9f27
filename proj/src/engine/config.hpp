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

#ifndef CODEARENA_ENGINE_CONFIG_HPP_
#define CODEARENA_ENGINE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sandbox/editor.hpp"

namespace codearena::engine {

struct PlayerSpec {
  std::string player_id;
  sandbox::EditorSpec editor;
  std::filesystem::path workspace_template;
};

struct TournamentConfig {
  int rounds = 15;
  int sims_per_round = 1000;
  std::string arena_id;
  std::map<std::string, std::string> arena_args;
  std::vector<PlayerSpec> players;
  std::uint64_t master_seed = 0;
  int edit_step_budget = 30;
  bool opponent_visibility = false;
  // Timestamp component of the tournament id (yymmddHHMMSS). Empty means
  // "now": set it for reproducible result trees.
  std::string stamp;
};

// Structural validation: unique token ids, positive counts, template
// presence is checked later at provision time. Throws ConfigError.
void ValidateConfig(const TournamentConfig& config);

// Loads the sectioned config file (tournament / game / players). Relative
// workspace templates resolve against the config file's directory.
TournamentConfig LoadConfigFile(const std::filesystem::path& path);

// Canonical text used for the config digest; stable across runs.
std::string CanonicalConfigString(const TournamentConfig& config);
std::string ConfigDigest(const TournamentConfig& config);

}  // namespace codearena::engine

#endif  // CODEARENA_ENGINE_CONFIG_HPP_
