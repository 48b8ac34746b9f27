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

#include "arena/arena.hpp"

#include <mutex>

#include "util/errors.hpp"
#include "util/rng.hpp"
#include "util/text.hpp"

namespace codearena::arena {

namespace {

std::map<std::string, ArenaFactory>& Registry() {
  static std::map<std::string, ArenaFactory> registry;
  return registry;
}

std::mutex& RegistryMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

std::uint64_t SimSeed(std::uint64_t match_seed, int sim_index) {
  return DeriveSeed(match_seed, {static_cast<std::uint64_t>(sim_index)});
}

MatchTally RunMatch(const Arena& arena,
                    const std::vector<Participant>& participants, int sims,
                    std::uint64_t seed, const std::filesystem::path& log_dir) {
  if (sims < 1) throw DataError("sims must be at least 1");
  const auto& desc = arena.descriptor();
  if (static_cast<int>(participants.size()) < desc.min_players ||
      static_cast<int>(participants.size()) > desc.max_players) {
    throw DataError("participant count outside arena bounds for " +
                    desc.arena_id);
  }

  MatchTally tally;
  tally.sims = sims;
  for (const auto& p : participants) tally.sim_wins[p.player_id] = 0;

  std::filesystem::create_directories(log_dir);
  for (int k = 0; k < sims; ++k) {
    std::filesystem::path log_path =
        log_dir / ("sim_" + std::to_string(k) + "." + desc.log_extension);
    SimOutcome outcome;
    try {
      outcome = arena.RunSimulation(participants, SimSeed(seed, k), log_path);
    } catch (const InfraError& e) {
      throw InfraError(std::string(e.what()) + " (after " + std::to_string(k) +
                       " completed simulations)");
    }
    if (outcome.winner.empty()) {
      ++tally.ties;
    } else {
      auto it = tally.sim_wins.find(outcome.winner);
      if (it == tally.sim_wins.end()) {
        throw InfraError("arena reported a non-participant winner: " +
                         outcome.winner);
      }
      ++it->second;
    }
  }
  return tally;
}

void RegisterArena(const std::string& arena_id, ArenaFactory factory) {
  std::lock_guard<std::mutex> lock(RegistryMutex());
  Registry()[arena_id] = std::move(factory);
}

bool IsArenaRegistered(const std::string& arena_id) {
  std::lock_guard<std::mutex> lock(RegistryMutex());
  return Registry().count(arena_id) > 0;
}

std::unique_ptr<Arena> MakeArena(const std::string& arena_id,
                                 const std::map<std::string, std::string>& args) {
  std::lock_guard<std::mutex> lock(RegistryMutex());
  auto it = Registry().find(arena_id);
  if (it == Registry().end()) {
    throw ConfigError("unknown arena: " + arena_id);
  }
  return it->second(args);
}

std::vector<std::string> RegisteredArenaIds() {
  std::lock_guard<std::mutex> lock(RegistryMutex());
  std::vector<std::string> ids;
  for (const auto& [id, factory] : Registry()) ids.push_back(id);
  return ids;
}

}  // namespace codearena::arena
