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

#ifndef CODEARENA_RATING_WIN_MATRIX_HPP_
#define CODEARENA_RATING_WIN_MATRIX_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace codearena::rating {

// One decided head-to-head series (for the engine: one tournament).
// An empty winner means a draw.
struct MatchupResult {
  std::string player_a;
  std::string player_b;
  std::string winner;
};

// Pairwise win counts. w[i][j] = number of matchups player ids[i] won
// against ids[j]; diagonal is zero. Counts are stored as doubles so the
// optional draw-split mode (0.5 per side) has somewhere to live.
class WinMatrix {
 public:
  WinMatrix() = default;
  WinMatrix(std::vector<std::string> ids,
            std::vector<std::vector<double>> wins);

  // Builds the matrix from decided matchups. Draws are excluded from the
  // counts unless split_draws is set, in which case each side receives 0.5
  // (an approximation; the likelihood still treats counts as Bernoulli
  // totals).
  static WinMatrix FromResults(const std::vector<MatchupResult>& results,
                               bool split_draws = false);

  // Same, but over a fixed id universe (players absent from `results` keep
  // zero rows). Used by the bootstrap so resamples stay comparable.
  static WinMatrix FromResultsWithIds(const std::vector<MatchupResult>& results,
                                      const std::vector<std::string>& ids,
                                      bool split_draws = false);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  double wins(int i, int j) const { return w_[i][j]; }
  double& wins(int i, int j) { return w_[i][j]; }
  // Total games between i and j: w_ij + w_ji.
  double games(int i, int j) const { return w_[i][j] + w_[j][i]; }
  double total_games() const;

  int IndexOf(const std::string& id) const;  // -1 when absent

  // True when every pair of players is linked through games played.
  bool IsConnected() const;

  // Delimiter-separated text with a header row of ids.
  std::string ToCsv() const;
  static WinMatrix FromCsv(const std::string& text);
  void Save(const std::filesystem::path& path) const;
  static WinMatrix Load(const std::filesystem::path& path);

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<double>> w_;
};

}  // namespace codearena::rating

#endif  // CODEARENA_RATING_WIN_MATRIX_HPP_
