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

#ifndef CODEARENA_ANALYTICS_SIMILARITY_HPP_
#define CODEARENA_ANALYTICS_SIMILARITY_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace codearena::analytics {

struct MatchingBlock {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

// Gestalt (Ratcliff-Obershelp) similarity: ratio = 2M / (|a| + |b|) where
// M is the total length of the recursive longest-matching-block
// decomposition. Among equally long blocks the one starting earliest in a
// wins, then earliest in b. No junk heuristics. Two empty sequences are
// fully similar by convention.
double Similarity(std::string_view a, std::string_view b);

// The decomposition behind the ratio, in (a, b) order; exposed for tests.
std::vector<MatchingBlock> MatchingBlocks(std::string_view a,
                                          std::string_view b);

}  // namespace codearena::analytics

#endif  // CODEARENA_ANALYTICS_SIMILARITY_HPP_
