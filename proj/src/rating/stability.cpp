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

#include "rating/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "util/errors.hpp"

namespace codearena::rating {

namespace {

// rank position per player index, 0-based.
std::vector<int> PositionsOf(const Ranking& ranking) {
  const int n = static_cast<int>(ranking.size());
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    int player = ranking[p];
    if (player < 0 || player >= n || pos[player] != -1) {
      throw DataError("ranking is not a permutation of the player set");
    }
    pos[player] = p;
  }
  return pos;
}

}  // namespace

StabilityReport Stability(const Ranking& reference,
                          const std::vector<Ranking>& rank_samples) {
  const int n = static_cast<int>(reference.size());
  if (n < 2) throw DataError("stability needs at least 2 players");
  if (rank_samples.empty()) throw DataError("no rank samples");
  std::vector<int> ref_pos = PositionsOf(reference);

  const double pairs = n * (n - 1) / 2.0;
  const double footrule_norm =
      (n % 2 == 0) ? n * n / 2.0 : (n * n - 1) / 2.0;

  StabilityReport report;
  report.samples = static_cast<int>(rank_samples.size());
  for (const Ranking& sample : rank_samples) {
    if (static_cast<int>(sample.size()) != n) {
      throw DataError("rank sample size does not match reference");
    }
    std::vector<int> pos = PositionsOf(sample);

    int concordant = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        bool ref_order = ref_pos[i] < ref_pos[j];
        bool sample_order = pos[i] < pos[j];
        if (ref_order == sample_order) ++concordant;
      }
    }
    int discordant = static_cast<int>(pairs) - concordant;
    report.kendall_tau += (concordant - discordant) / pairs;
    report.pairwise_order_agreement += concordant / pairs;

    double d2 = 0.0;
    double d1 = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = ref_pos[i] - pos[i];
      d2 += d * d;
      d1 += std::abs(d);
    }
    report.spearman_rho +=
        1.0 - 6.0 * d2 / (static_cast<double>(n) * (n * n - 1.0));
    report.footrule_normalized += d1 / footrule_norm;

    if (sample[0] == reference[0]) report.top1_consistency += 1.0;
  }

  const double m = static_cast<double>(report.samples);
  report.kendall_tau /= m;
  report.spearman_rho /= m;
  report.footrule_normalized /= m;
  report.top1_consistency /= m;
  report.pairwise_order_agreement /= m;
  return report;
}

}  // namespace codearena::rating
