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

#include "engine/config.hpp"

#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::engine {

namespace {

// Player ids may not shadow the reserved result tokens.
const std::set<std::string> kReservedIds = {"TIE", "DRAW"};

std::string RequireString(const YAML::Node& node, const std::string& field) {
  if (!node || !node.IsScalar()) {
    throw ConfigError("config: " + field + " missing");
  }
  return node.as<std::string>();
}

std::int64_t RequireInt(const YAML::Node& node, const std::string& field) {
  if (!node || !node.IsScalar()) {
    throw ConfigError("config: " + field + " missing");
  }
  auto parsed = ParseInt(node.as<std::string>());
  if (!parsed) {
    throw ConfigError("config: " + field + " is not an integer");
  }
  return *parsed;
}

sandbox::EditorSpec ParseEditor(const YAML::Node& player,
                                const std::string& where) {
  sandbox::EditorSpec editor;
  std::string kind = RequireString(player["editor"], where + ".editor");
  if (kind == "noop") {
    editor.kind = sandbox::EditorKind::kNoop;
  } else if (kind == "scripted") {
    editor.kind = sandbox::EditorKind::kScripted;
    const YAML::Node& scripts = player["scripts"];
    if (!scripts || !scripts.IsSequence()) {
      throw ConfigError("config: " + where +
                        ".scripts missing for scripted editor");
    }
    for (const auto& s : scripts) {
      editor.scripts.push_back(s.as<std::string>());
    }
  } else if (kind == "external") {
    editor.kind = sandbox::EditorKind::kExternal;
    editor.command = RequireString(player["command"], where + ".command");
    if (TrimWhitespace(editor.command).empty()) {
      throw ConfigError("config: " + where + ".command is empty");
    }
  } else {
    throw ConfigError("config: " + where + ".editor must be noop, scripted "
                      "or external");
  }
  return editor;
}

}  // namespace

void ValidateConfig(const TournamentConfig& config) {
  if (config.rounds < 1) throw ConfigError("config: rounds must be >= 1");
  if (config.sims_per_round < 1) {
    throw ConfigError("config: sims_per_round must be >= 1");
  }
  if (config.edit_step_budget < 0) {
    throw ConfigError("config: edit_step_budget must be >= 0");
  }
  if (config.arena_id.empty()) throw ConfigError("config: game.name missing");
  if (config.players.size() < 2) {
    throw ConfigError("config: at least 2 players required");
  }
  std::set<std::string> seen;
  for (const auto& player : config.players) {
    if (!IsValidToken(player.player_id)) {
      throw ConfigError("config: player id is not a valid token: '" +
                        player.player_id + "'");
    }
    if (kReservedIds.count(player.player_id)) {
      throw ConfigError("config: player id is reserved: " + player.player_id);
    }
    if (!seen.insert(player.player_id).second) {
      throw ConfigError("config: duplicate player id: " + player.player_id);
    }
    if (player.editor.kind == sandbox::EditorKind::kScripted &&
        static_cast<int>(player.editor.scripts.size()) > config.rounds) {
      throw ConfigError("config: player " + player.player_id +
                        " supplies more scripts than rounds");
    }
  }
  if (!config.stamp.empty()) {
    if (config.stamp.size() != 12 || !ParseInt(config.stamp)) {
      throw ConfigError("config: stamp must be 12 digits (yymmddHHMMSS)");
    }
  }
}

TournamentConfig LoadConfigFile(const std::filesystem::path& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path.string());
  } catch (const YAML::BadFile&) {
    throw ConfigError("config file not readable: " + path.string());
  } catch (const YAML::Exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }

  TournamentConfig config;
  const YAML::Node& tournament = root["tournament"];
  if (!tournament || !tournament.IsMap()) {
    throw ConfigError("config: tournament section missing");
  }
  config.rounds = static_cast<int>(RequireInt(tournament["rounds"],
                                              "tournament.rounds"));
  if (tournament["master_seed"]) {
    config.master_seed = static_cast<std::uint64_t>(
        RequireInt(tournament["master_seed"], "tournament.master_seed"));
  }
  if (tournament["edit_step_budget"]) {
    config.edit_step_budget = static_cast<int>(RequireInt(
        tournament["edit_step_budget"], "tournament.edit_step_budget"));
  }
  if (tournament["opponent_visibility"]) {
    config.opponent_visibility = tournament["opponent_visibility"].as<bool>();
  }
  if (tournament["stamp"]) {
    config.stamp = tournament["stamp"].as<std::string>();
  }

  const YAML::Node& game = root["game"];
  if (!game || !game.IsMap()) {
    throw ConfigError("config: game section missing");
  }
  config.arena_id = RequireString(game["name"], "game.name");
  if (game["sims_per_round"]) {
    config.sims_per_round = static_cast<int>(
        RequireInt(game["sims_per_round"], "game.sims_per_round"));
  }
  if (game["args"]) {
    if (!game["args"].IsMap()) {
      throw ConfigError("config: game.args must be a map");
    }
    for (const auto& kv : game["args"]) {
      config.arena_args[kv.first.as<std::string>()] =
          kv.second.as<std::string>();
    }
  }

  const YAML::Node& players = root["players"];
  if (!players || !players.IsSequence()) {
    throw ConfigError("config: players section missing");
  }
  int index = 0;
  for (const auto& node : players) {
    std::string where = "players[" + std::to_string(index++) + "]";
    PlayerSpec spec;
    spec.player_id = RequireString(node["id"], where + ".id");
    spec.editor = ParseEditor(node, where);
    std::string template_path =
        RequireString(node["template"], where + ".template");
    std::filesystem::path t(template_path);
    if (t.is_relative()) t = path.parent_path() / t;
    spec.workspace_template = t;
    config.players.push_back(std::move(spec));
  }

  ValidateConfig(config);
  return config;
}

std::string CanonicalConfigString(const TournamentConfig& config) {
  std::ostringstream out;
  out << "rounds=" << config.rounds << '\n'
      << "sims_per_round=" << config.sims_per_round << '\n'
      << "arena=" << config.arena_id << '\n'
      << "master_seed=" << config.master_seed << '\n'
      << "edit_step_budget=" << config.edit_step_budget << '\n'
      << "opponent_visibility=" << (config.opponent_visibility ? 1 : 0)
      << '\n';
  for (const auto& [key, value] : config.arena_args) {
    out << "arg." << key << '=' << value << '\n';
  }
  for (const auto& player : config.players) {
    out << "player." << player.player_id << ".editor=";
    switch (player.editor.kind) {
      case sandbox::EditorKind::kNoop:
        out << "noop";
        break;
      case sandbox::EditorKind::kScripted:
        out << "scripted(" << player.editor.scripts.size() << ")";
        for (const auto& s : player.editor.scripts) out << '|' << s;
        break;
      case sandbox::EditorKind::kExternal:
        out << "external|" << player.editor.command;
        break;
    }
    out << '\n';
  }
  return out.str();
}

std::string ConfigDigest(const TournamentConfig& config) {
  return DigestHex(Fnv1a64(CanonicalConfigString(config)));
}

}  // namespace codearena::engine
