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

#ifndef CODEARENA_ENGINE_TOURNAMENT_HPP_
#define CODEARENA_ENGINE_TOURNAMENT_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "engine/config.hpp"
#include "engine/records.hpp"
#include "util/rng.hpp"

namespace codearena::engine {

// Validity map -> disposition plus the ids allowed to compete, in the
// map's iteration order. The decision tree: all invalid ties the round, a
// single valid player wins by walkover, otherwise the valid players play
// and invalid ones are excluded.
struct ValidityResolution {
  Disposition disposition;
  std::vector<std::string> participants;
};
ValidityResolution ResolveValidity(const std::map<std::string, bool>& validity);

// Most simulation wins takes the round; a shared maximum is a tie, and so
// is a tie count strictly above every player's wins. Empty winner = tie.
std::string DecideRoundWinner(const std::map<std::string, int>& sim_wins,
                              int ties);

// Most round wins takes the tournament; equal counts go to the later last
// win; an all-tie tournament is a draw (empty winner).
std::string DecideTournamentWinner(const std::vector<std::string>& round_winners);

// Uniform shuffle of the ids, reproducible from the rng state.
std::vector<std::string> ShuffleOrder(Rng& rng, std::vector<std::string> ids);

// Per-simulation seed derivation: hash(master_seed, round, sim) — RunMatch
// applies the final sim-index step.
std::uint64_t RoundMatchSeed(std::uint64_t master_seed, int round_index);
std::uint64_t RoundShuffleSeed(std::uint64_t master_seed, int round_index);

std::string BuildTournamentId(const TournamentConfig& config);

// Per-player score: (sim_wins + 0.5 * ties) / sims * 100.
double RoundScore(int sim_wins, int ties, int sims);

// Runs the full two-phase round loop and persists the results tree under
// out_dir/<tournament_id>/. Partial results are flushed before any abort.
TournamentRecord RunTournament(const TournamentConfig& config,
                               const std::filesystem::path& out_dir);

}  // namespace codearena::engine

#endif  // CODEARENA_ENGINE_TOURNAMENT_HPP_
