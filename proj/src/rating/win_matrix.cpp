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

#include "rating/win_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "util/errors.hpp"
#include "util/fs.hpp"
#include "util/text.hpp"

namespace codearena::rating {

WinMatrix::WinMatrix(std::vector<std::string> ids,
                     std::vector<std::vector<double>> wins)
    : ids_(std::move(ids)), w_(std::move(wins)) {
  const std::size_t n = ids_.size();
  if (w_.size() != n) throw DataError("win matrix not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (w_[i].size() != n) throw DataError("win matrix not square");
    if (w_[i][i] != 0.0) throw DataError("win matrix diagonal must be zero");
    for (double v : w_[i]) {
      if (v < 0.0) throw DataError("win matrix entries must be non-negative");
    }
  }
}

WinMatrix WinMatrix::FromResults(const std::vector<MatchupResult>& results,
                                 bool split_draws) {
  std::set<std::string> id_set;
  for (const auto& r : results) {
    id_set.insert(r.player_a);
    id_set.insert(r.player_b);
  }
  std::vector<std::string> ids(id_set.begin(), id_set.end());
  return FromResultsWithIds(results, ids, split_draws);
}

WinMatrix WinMatrix::FromResultsWithIds(
    const std::vector<MatchupResult>& results,
    const std::vector<std::string>& ids, bool split_draws) {
  if (results.empty()) throw DataError("no matchup results");
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  WinMatrix m(ids, std::move(w));
  for (const auto& r : results) {
    int a = m.IndexOf(r.player_a);
    int b = m.IndexOf(r.player_b);
    if (a < 0 || b < 0) {
      throw DataError("unknown player id in matchup: " +
                      (a < 0 ? r.player_a : r.player_b));
    }
    if (a == b) throw DataError("matchup between a player and itself");
    if (r.winner.empty()) {
      if (split_draws) {
        m.w_[a][b] += 0.5;
        m.w_[b][a] += 0.5;
      }
      continue;  // draws are excluded by default
    }
    if (r.winner == r.player_a) {
      m.w_[a][b] += 1.0;
    } else if (r.winner == r.player_b) {
      m.w_[b][a] += 1.0;
    } else {
      throw DataError("winner is not a participant: " + r.winner);
    }
  }
  return m;
}

double WinMatrix::total_games() const {
  double total = 0.0;
  for (const auto& row : w_) {
    for (double v : row) total += v;
  }
  return total;
}

int WinMatrix::IndexOf(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return static_cast<int>(i);
  }
  return -1;
}

bool WinMatrix::IsConnected() const {
  const int n = size();
  if (n == 0) return false;
  std::vector<int> component(n);
  for (int i = 0; i < n; ++i) component[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (component[x] != x) x = component[x] = component[component[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (games(i, j) > 0.0) component[find(i)] = find(j);
    }
  }
  for (int i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

std::string WinMatrix::ToCsv() const {
  std::ostringstream out;
  out << "id";
  for (const auto& id : ids_) out << ',' << id;
  out << '\n';
  for (int i = 0; i < size(); ++i) {
    out << ids_[i];
    for (int j = 0; j < size(); ++j) {
      double v = w_[i][j];
      if (v == static_cast<double>(static_cast<long long>(v))) {
        out << ',' << static_cast<long long>(v);
      } else {
        out << ',' << FormatFixed(v, 1);
      }
    }
    out << '\n';
  }
  return out.str();
}

WinMatrix WinMatrix::FromCsv(const std::string& text) {
  std::vector<std::string> lines;
  for (auto& line : SplitString(text, '\n')) {
    if (!TrimWhitespace(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw DataError("empty win matrix text");
  auto header = SplitString(lines[0], ',');
  if (header.size() < 2) throw DataError("win matrix header missing ids");
  std::vector<std::string> ids(header.begin() + 1, header.end());
  const int n = static_cast<int>(ids.size());
  if (static_cast<int>(lines.size()) != n + 1) {
    throw DataError("win matrix row count does not match header");
  }
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    auto cells = SplitString(lines[i + 1], ',');
    if (static_cast<int>(cells.size()) != n + 1 || cells[0] != ids[i]) {
      throw DataError("win matrix row " + std::to_string(i + 1) +
                      " malformed");
    }
    for (int j = 0; j < n; ++j) {
      auto v = ParseDouble(cells[j + 1]);
      if (!v) throw DataError("win matrix cell unparsable: " + cells[j + 1]);
      w[i][j] = *v;
    }
  }
  return WinMatrix(std::move(ids), std::move(w));
}

void WinMatrix::Save(const std::filesystem::path& path) const {
  WriteFileOrThrow(path, ToCsv());
}

WinMatrix WinMatrix::Load(const std::filesystem::path& path) {
  return FromCsv(ReadFileOrThrow(path));
}

}  // namespace codearena::rating
