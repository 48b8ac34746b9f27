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

#include "analytics/similarity.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace codearena::analytics {

namespace {

// Index of each byte's occurrences in b, ascending. A 256-slot table
// instead of a hash map since sequences are raw bytes.
struct OccurrenceIndex {
  std::array<std::vector<std::size_t>, 256> positions;

  explicit OccurrenceIndex(std::string_view b) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      positions[static_cast<unsigned char>(b[j])].push_back(j);
    }
  }
};

// Longest block matching a[alo, ahi) against b[blo, bhi). Scans i
// ascending; for each i, run lengths ending at (i, j) extend the runs
// ending at (i-1, j-1). Strict improvement keeps the earliest (a, then b)
// block among equals.
MatchingBlock FindLongestMatch(std::string_view a, const OccurrenceIndex& occ,
                               std::size_t alo, std::size_t ahi,
                               std::size_t blo, std::size_t bhi) {
  MatchingBlock best{alo, blo, 0};
  std::unordered_map<std::size_t, std::size_t> run_ending_at;
  std::unordered_map<std::size_t, std::size_t> next_run;
  for (std::size_t i = alo; i < ahi; ++i) {
    next_run.clear();
    const auto& js = occ.positions[static_cast<unsigned char>(a[i])];
    for (std::size_t j : js) {
      if (j < blo) continue;
      if (j >= bhi) break;
      std::size_t k = 1;
      if (j > blo) {
        auto it = run_ending_at.find(j - 1);
        if (it != run_ending_at.end()) k = it->second + 1;
      }
      next_run[j] = k;
      if (k > best.size) {
        best = MatchingBlock{i - k + 1, j - k + 1, k};
      }
    }
    std::swap(run_ending_at, next_run);
  }
  return best;
}

}  // namespace

std::vector<MatchingBlock> MatchingBlocks(std::string_view a,
                                          std::string_view b) {
  OccurrenceIndex occ(b);
  std::vector<MatchingBlock> blocks;
  // Explicit work list instead of recursion; ordering of regions does not
  // affect the block set.
  std::vector<std::array<std::size_t, 4>> pending;
  pending.push_back({0, a.size(), 0, b.size()});
  while (!pending.empty()) {
    auto [alo, ahi, blo, bhi] = pending.back();
    pending.pop_back();
    MatchingBlock m = FindLongestMatch(a, occ, alo, ahi, blo, bhi);
    if (m.size == 0) continue;
    blocks.push_back(m);
    if (alo < m.a && blo < m.b) pending.push_back({alo, m.a, blo, m.b});
    if (m.a + m.size < ahi && m.b + m.size < bhi) {
      pending.push_back({m.a + m.size, ahi, m.b + m.size, bhi});
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const MatchingBlock& x, const MatchingBlock& y) {
              return x.a < y.a;
            });
  return blocks;
}

double Similarity(std::string_view a, std::string_view b) {
  const std::size_t total = a.size() + b.size();
  if (total == 0) return 1.0;
  std::size_t matched = 0;
  for (const MatchingBlock& block : MatchingBlocks(a, b)) {
    matched += block.size;
  }
  return 2.0 * static_cast<double>(matched) / static_cast<double>(total);
}

}  // namespace codearena::analytics
