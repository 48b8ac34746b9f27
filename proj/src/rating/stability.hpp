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

#ifndef CODEARENA_RATING_STABILITY_HPP_
#define CODEARENA_RATING_STABILITY_HPP_

#include <vector>

#include "rating/bootstrap.hpp"

namespace codearena::rating {

// Rank-stability metrics of bootstrap rankings against a reference,
// averaged over samples. Conventions (the source material does not define
// the last three precisely; these definitions are fixed and must not be
// changed silently):
//  - kendall_tau: (concordant - discordant) / C(n,2)
//  - spearman_rho: 1 - 6 sum d_i^2 / (n (n^2 - 1))
//  - footrule_normalized: sum |r_i - r'_i| divided by n^2/2 (n even) or
//    (n^2 - 1)/2 (n odd)
//  - top1_consistency: fraction of samples agreeing with the reference on
//    the top-ranked player
//  - pairwise_order_agreement: over all unordered pairs and all samples,
//    fraction where the sample orders the pair like the reference
struct StabilityReport {
  double kendall_tau = 0.0;
  double spearman_rho = 0.0;
  double footrule_normalized = 0.0;
  double top1_consistency = 0.0;
  double pairwise_order_agreement = 0.0;
  int samples = 0;
};

StabilityReport Stability(const Ranking& reference,
                          const std::vector<Ranking>& rank_samples);

}  // namespace codearena::rating

#endif  // CODEARENA_RATING_STABILITY_HPP_
