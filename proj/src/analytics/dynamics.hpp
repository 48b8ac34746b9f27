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

#ifndef CODEARENA_ANALYTICS_DYNAMICS_HPP_
#define CODEARENA_ANALYTICS_DYNAMICS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rating/win_matrix.hpp"

namespace codearena::analytics {

// Ordered-pair win fractions: entry (i, j) is the fraction of tournaments
// i won against j, draws counted in the denominator. Pairs that never
// played are absent.
struct WinRateMatrix {
  std::vector<std::string> ids;
  // rate[i][j] present iff i and j played at least once.
  std::vector<std::vector<std::optional<double>>> rate;
};

WinRateMatrix ComputeWinRates(const std::vector<rating::MatchupResult>& results);

enum class RoundResult { kWin, kLoss, kTie };

// Per-round results of one tournament for a focal player.
using OutcomeSeries = std::vector<RoundResult>;

struct ComebackStat {
  int events = 0;
  int next_round_wins = 0;
  std::optional<double> probability;  // absent when no qualifying events
};

// Probability of winning the round that follows a losing streak of exactly
// k rounds. An event is a round r with results r-k+1..r all losses and
// round r-k (when present) not a loss; events in a tournament's final
// round have no next round and are excluded.
ComebackStat ComebackProbability(const std::vector<OutcomeSeries>& series,
                                 int k);

// Fraction of consecutive non-tie round-winner pairs that differ. Tie
// rounds are skipped, not treated as changes. Winner sequences never span
// tournament boundaries. Absent with fewer than 2 non-tie rounds overall.
std::optional<double> LeadChangeRate(
    const std::vector<std::vector<std::string>>& winners_per_tournament);

// Round wins of each player divided by the tournament's non-tie rounds.
// Absent for an all-tie tournament.
std::optional<std::map<std::string, double>> WinShare(
    const std::vector<std::string>& players,
    const std::vector<std::string>& round_winners);

struct SimilaritySample {
  int round = 0;
  int texts = 0;
  std::optional<double> mean_pairwise;  // absent with fewer than 2 texts
};

// Mean pairwise gestalt similarity of one player's solution texts at the
// same round across tournaments. `texts` must already be ordered by
// tournament id; each unordered pair is compared in that order, which
// pins down the matcher's mild order sensitivity.
SimilaritySample SolutionDiversity(int round,
                                   const std::vector<std::string>& texts);

}  // namespace codearena::analytics

#endif  // CODEARENA_ANALYTICS_DYNAMICS_HPP_
