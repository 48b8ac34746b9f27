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

#include "rating/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "util/errors.hpp"

namespace codearena::rating {

namespace {

void FinalizeReport(BootstrapReport& report) {
  const std::size_t n = report.ids.size();
  if (report.elo_samples.empty()) {
    throw DataError("all bootstrap refits failed (" +
                    std::to_string(report.samples_failed) + " of " +
                    std::to_string(report.samples_requested) + ")");
  }
  report.sd.assign(n, 0.0);
  const double m = static_cast<double>(report.elo_samples.size());
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (const auto& row : report.elo_samples) mean += row[i];
    mean /= m;
    double ss = 0.0;
    for (const auto& row : report.elo_samples) {
      ss += (row[i] - mean) * (row[i] - mean);
    }
    report.sd[i] = m > 1.0 ? std::sqrt(ss / (m - 1.0)) : 0.0;
  }
  report.rank_samples.reserve(report.elo_samples.size());
  for (const auto& row : report.elo_samples) {
    report.rank_samples.push_back(RankingFromRatings(row));
  }
}

// Refit one replica; false when the sample is degenerate.
bool TryAppendSample(BootstrapReport& report, const WinMatrix& sample,
                     const FitOptions& fit_options) {
  try {
    StrengthFit fit = Fit(sample, fit_options);
    if (!fit.converged) return false;
    EloReport elo = ToElo(fit);
    report.elo_samples.push_back(std::move(elo.rating));
    return true;
  } catch (const DataError&) {
    return false;
  }
}

}  // namespace

Ranking RankingFromRatings(const std::vector<double>& ratings) {
  Ranking order(ratings.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (ratings[a] != ratings[b]) return ratings[a] > ratings[b];
    return a < b;
  });
  return order;
}

BootstrapReport BootstrapNonparametric(const std::vector<MatchupResult>& results,
                                       int samples, Rng& rng,
                                       const FitOptions& fit_options) {
  if (samples < 1) throw DataError("bootstrap needs at least 1 sample");
  if (results.empty()) throw DataError("no matchup results to resample");

  // The id universe is fixed from the observed data so every replica's
  // ratings line up player by player.
  WinMatrix observed = WinMatrix::FromResults(results);
  BootstrapReport report;
  report.samples_requested = samples;
  report.ids = observed.ids();

  std::vector<MatchupResult> resampled(results.size());
  for (int b = 0; b < samples; ++b) {
    for (std::size_t k = 0; k < results.size(); ++k) {
      resampled[k] = results[rng.UniformBelow(results.size())];
    }
    WinMatrix sample =
        WinMatrix::FromResultsWithIds(resampled, report.ids, false);
    if (!TryAppendSample(report, sample, fit_options)) {
      ++report.samples_failed;
    }
  }
  FinalizeReport(report);
  return report;
}

BootstrapReport BootstrapParametric(const StrengthFit& fit, const WinMatrix& w,
                                    int samples, Rng& rng,
                                    const FitOptions& fit_options) {
  if (samples < 1) throw DataError("bootstrap needs at least 1 sample");
  const int n = w.size();
  if (static_cast<int>(fit.s.size()) != n) {
    throw DataError("fit and win matrix sizes differ");
  }

  BootstrapReport report;
  report.samples_requested = samples;
  report.ids = w.ids();

  for (int b = 0; b < samples; ++b) {
    std::vector<std::vector<double>> draws(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int nij = static_cast<int>(std::llround(w.games(i, j)));
        if (nij <= 0) continue;
        double p_star = Predict(fit, i, j);
        int wij = rng.Binomial(nij, p_star);
        draws[i][j] = wij;
        draws[j][i] = nij - wij;
      }
    }
    WinMatrix sample(report.ids, std::move(draws));
    if (!TryAppendSample(report, sample, fit_options)) {
      ++report.samples_failed;
    }
  }
  FinalizeReport(report);
  return report;
}

}  // namespace codearena::rating
