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

#include "similarity_oracle.hpp"

#include <cstddef>
#include <vector>

namespace codearena::testing {

namespace {

struct Block {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

// Longest common substring of a[alo, ahi) and b[blo, bhi) by the textbook
// dynamic program: runs[j] = length of the common suffix ending at
// (i, j). Scanning i then j ascending with strict improvement implements
// the earliest-in-a, earliest-in-b tie-break.
Block LongestCommon(std::string_view a, std::string_view b, std::size_t alo,
                    std::size_t ahi, std::size_t blo, std::size_t bhi) {
  Block best{alo, blo, 0};
  std::vector<std::size_t> runs(bhi - blo, 0);
  std::vector<std::size_t> prev(bhi - blo, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      std::size_t run = 0;
      if (a[i] == b[j]) {
        run = (j > blo ? prev[j - blo - 1] : 0) + 1;
      }
      runs[j - blo] = run;
      if (run > best.size) {
        best = Block{i - run + 1, j - run + 1, run};
      }
    }
    runs.swap(prev);
    runs.assign(runs.size(), 0);
  }
  return best;
}

std::size_t MatchedTotal(std::string_view a, std::string_view b,
                         std::size_t alo, std::size_t ahi, std::size_t blo,
                         std::size_t bhi) {
  if (alo >= ahi || blo >= bhi) return 0;
  Block block = LongestCommon(a, b, alo, ahi, blo, bhi);
  if (block.size == 0) return 0;
  return block.size + MatchedTotal(a, b, alo, block.a, blo, block.b) +
         MatchedTotal(a, b, block.a + block.size, ahi, block.b + block.size,
                      bhi);
}

}  // namespace

double ReferenceSimilarity(std::string_view a, std::string_view b) {
  if (a.size() + b.size() == 0) return 1.0;
  std::size_t matched = MatchedTotal(a, b, 0, a.size(), 0, b.size());
  return 2.0 * static_cast<double>(matched) /
         static_cast<double>(a.size() + b.size());
}

}  // namespace codearena::testing
