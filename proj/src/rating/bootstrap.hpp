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

#ifndef CODEARENA_RATING_BOOTSTRAP_HPP_
#define CODEARENA_RATING_BOOTSTRAP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rating/bradley_terry.hpp"
#include "rating/win_matrix.hpp"
#include "util/rng.hpp"

namespace codearena::rating {

// Rankings are index permutations, best player first.
using Ranking = std::vector<int>;

Ranking RankingFromRatings(const std::vector<double>& ratings);

struct BootstrapReport {
  int samples_requested = 0;
  int samples_failed = 0;  // refits rejected for separation/identifiability
  std::vector<std::string> ids;
  std::vector<std::vector<double>> elo_samples;  // one row per success
  std::vector<double> sd;                        // per-player sample SD
  std::vector<Ranking> rank_samples;
};

// Resamples whole tournaments with replacement, refits, converts to Elo.
// Failed refits are excluded and counted; all samples failing is an error.
BootstrapReport BootstrapNonparametric(const std::vector<MatchupResult>& results,
                                       int samples, Rng& rng,
                                       const FitOptions& fit_options = {});

// Parametric replicas: for each observed matchup, redraw the win split
// from Binomial(n_ij, p*_ij) with p* taken from the fitted strengths,
// preserving the matchup graph and game counts.
BootstrapReport BootstrapParametric(const StrengthFit& fit, const WinMatrix& w,
                                    int samples, Rng& rng,
                                    const FitOptions& fit_options = {});

}  // namespace codearena::rating

#endif  // CODEARENA_RATING_BOOTSTRAP_HPP_
