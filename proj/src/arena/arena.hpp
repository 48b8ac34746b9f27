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

#ifndef CODEARENA_ARENA_ARENA_HPP_
#define CODEARENA_ARENA_ARENA_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace codearena::arena {

struct ArenaDescriptor {
  std::string arena_id;
  int min_players = 2;
  int max_players = 2;
  std::string validation_rules;  // human-readable entrypoint contract
  std::string log_format;        // token, e.g. "jsonl"
  std::string log_extension;     // per-sim file extension, no dot
  // Workspace-relative file holding the player's solution text, copied
  // into the results tree each round for the diversity analytics.
  std::string solution_file;
};

struct ValidationReport {
  bool ok = false;
  std::string reason;  // non-empty when not ok
};

struct Participant {
  std::string player_id;
  std::filesystem::path workspace_root;
};

// Result of one simulation. An empty winner means a tie.
struct SimOutcome {
  std::string winner;
  std::map<std::string, double> raw_score;
  std::filesystem::path log_path;
};

struct MatchTally {
  std::map<std::string, int> sim_wins;
  int ties = 0;
  int sims = 0;
};

// The pluggable competition platform: validate a workspace, then run
// seeded simulations over the ordered participants. Implementations must
// be reentrant across concurrent simulations (no shared mutable state).
class Arena {
 public:
  virtual ~Arena() = default;
  virtual const ArenaDescriptor& descriptor() const = 0;

  // Checks the entrypoint contract. An unreadable workspace is an
  // infrastructure problem and throws; an invalid submission returns
  // ok=false with a reason.
  virtual ValidationReport Validate(
      const std::filesystem::path& workspace_root) const = 0;

  // Deterministic function of (workspace content, order, seed); the log
  // is persisted at log_path. Arena crashes throw InfraError.
  virtual SimOutcome RunSimulation(const std::vector<Participant>& participants,
                                   std::uint64_t seed,
                                   const std::filesystem::path& log_path) const = 0;
};

// Runs `sims` simulations with per-sim seeds derived from `seed`, writing
// sim_<k>.<ext> logs under log_dir, and aggregates the tally. Simulation
// failures are rethrown with the number of completed sims attached.
MatchTally RunMatch(const Arena& arena,
                    const std::vector<Participant>& participants, int sims,
                    std::uint64_t seed, const std::filesystem::path& log_dir);

std::uint64_t SimSeed(std::uint64_t match_seed, int sim_index);

// Registry of arena factories keyed by arena id. Factories receive the
// config's arena args.
using ArenaFactory = std::function<std::unique_ptr<Arena>(
    const std::map<std::string, std::string>& args)>;

void RegisterArena(const std::string& arena_id, ArenaFactory factory);
bool IsArenaRegistered(const std::string& arena_id);
std::unique_ptr<Arena> MakeArena(const std::string& arena_id,
                                 const std::map<std::string, std::string>& args);
std::vector<std::string> RegisteredArenaIds();

// Registers the built-in arenas (NumberDuel, GridSnake); safe to call
// more than once.
void RegisterBuiltinArenas();

}  // namespace codearena::arena

#endif  // CODEARENA_ARENA_ARENA_HPP_
