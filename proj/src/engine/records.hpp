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

#ifndef CODEARENA_ENGINE_RECORDS_HPP_
#define CODEARENA_ENGINE_RECORDS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace codearena::engine {

enum class Disposition { kPlayed, kWalkover, kAllInvalidTie };

std::string DispositionToString(Disposition d);
std::optional<Disposition> DispositionFromString(const std::string& s);

struct RoundRecord {
  int round_index = 0;  // 1-based
  std::vector<std::string> player_order;
  std::map<std::string, bool> validity;
  std::map<std::string, std::string> invalid_reason;
  std::map<std::string, int> sim_wins;
  int ties = 0;
  std::map<std::string, double> score;  // (wins + 0.5*ties)/sims * 100
  std::string round_winner;             // empty = tie
  Disposition disposition = Disposition::kPlayed;
  std::string log_dir;  // relative to the results root
};

struct TournamentRecord {
  std::string tournament_id;
  std::string arena_id;
  std::string config_digest;
  std::vector<std::string> players;
  int sims_per_round = 0;
  std::uint64_t master_seed = 0;
  std::vector<RoundRecord> rounds;
  std::map<std::string, int> round_wins;
  std::map<std::string, int> last_win_round;  // players without wins absent
  std::string tournament_winner;              // empty = draw
  bool draw = false;
  std::string aborted_reason;  // non-empty when the run halted early
};

}  // namespace codearena::engine

#endif  // CODEARENA_ENGINE_RECORDS_HPP_
