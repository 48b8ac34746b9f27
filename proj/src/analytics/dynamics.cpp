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

#include "analytics/dynamics.hpp"

#include <algorithm>
#include <set>

#include "analytics/similarity.hpp"
#include "util/errors.hpp"

namespace codearena::analytics {

WinRateMatrix ComputeWinRates(const std::vector<rating::MatchupResult>& results) {
  std::set<std::string> id_set;
  for (const auto& r : results) {
    id_set.insert(r.player_a);
    id_set.insert(r.player_b);
  }
  WinRateMatrix matrix;
  matrix.ids.assign(id_set.begin(), id_set.end());
  const int n = static_cast<int>(matrix.ids.size());
  auto index_of = [&](const std::string& id) {
    return static_cast<int>(std::lower_bound(matrix.ids.begin(),
                                             matrix.ids.end(), id) -
                            matrix.ids.begin());
  };
  std::vector<std::vector<int>> wins(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> games(n, std::vector<int>(n, 0));
  for (const auto& r : results) {
    int a = index_of(r.player_a);
    int b = index_of(r.player_b);
    ++games[a][b];
    ++games[b][a];
    if (r.winner == r.player_a) ++wins[a][b];
    if (r.winner == r.player_b) ++wins[b][a];
  }
  matrix.rate.assign(n, std::vector<std::optional<double>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && games[i][j] > 0) {
        matrix.rate[i][j] = static_cast<double>(wins[i][j]) / games[i][j];
      }
    }
  }
  return matrix;
}

ComebackStat ComebackProbability(const std::vector<OutcomeSeries>& series,
                                 int k) {
  if (k < 1) throw DataError("streak length must be at least 1");
  ComebackStat stat;
  for (const OutcomeSeries& results : series) {
    const int rounds = static_cast<int>(results.size());
    // r is 0-based here; the event needs a next round, so the final round
    // is excluded.
    for (int r = 0; r + 1 < rounds; ++r) {
      if (r + 1 < k) continue;
      bool streak = true;
      for (int back = 0; back < k; ++back) {
        if (results[r - back] != RoundResult::kLoss) {
          streak = false;
          break;
        }
      }
      if (!streak) continue;
      if (r - k >= 0 && results[r - k] == RoundResult::kLoss) {
        continue;  // streak is longer than k; counted at its own length
      }
      ++stat.events;
      if (results[r + 1] == RoundResult::kWin) ++stat.next_round_wins;
    }
  }
  if (stat.events > 0) {
    stat.probability = static_cast<double>(stat.next_round_wins) /
                       static_cast<double>(stat.events);
  }
  return stat;
}

std::optional<double> LeadChangeRate(
    const std::vector<std::vector<std::string>>& winners_per_tournament) {
  int transitions = 0;
  int changes = 0;
  for (const auto& winners : winners_per_tournament) {
    std::string previous;
    for (const auto& winner : winners) {
      if (winner.empty()) continue;  // tie rounds are skipped
      if (!previous.empty()) {
        ++transitions;
        if (winner != previous) ++changes;
      }
      previous = winner;
    }
  }
  if (transitions == 0) return std::nullopt;
  return static_cast<double>(changes) / static_cast<double>(transitions);
}

std::optional<std::map<std::string, double>> WinShare(
    const std::vector<std::string>& players,
    const std::vector<std::string>& round_winners) {
  int decided = 0;
  std::map<std::string, int> wins;
  for (const auto& p : players) wins[p] = 0;
  for (const auto& winner : round_winners) {
    if (winner.empty()) continue;
    auto it = wins.find(winner);
    if (it == wins.end()) throw DataError("round winner is not a player: " + winner);
    ++decided;
    ++it->second;
  }
  if (decided == 0) return std::nullopt;
  std::map<std::string, double> share;
  for (const auto& [player, count] : wins) {
    share[player] = static_cast<double>(count) / static_cast<double>(decided);
  }
  return share;
}

SimilaritySample SolutionDiversity(int round,
                                   const std::vector<std::string>& texts) {
  SimilaritySample sample;
  sample.round = round;
  sample.texts = static_cast<int>(texts.size());
  if (texts.size() < 2) return sample;
  double total = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    for (std::size_t j = i + 1; j < texts.size(); ++j) {
      total += Similarity(texts[i], texts[j]);
      ++pairs;
    }
  }
  sample.mean_pairwise = total / pairs;
  return sample;
}

}  // namespace codearena::analytics
