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

#include <doctest.h>

#include <cmath>

#include "rating/stability.hpp"
#include "util/errors.hpp"

namespace {

using codearena::DataError;
using codearena::Rng;
using codearena::rating::BootstrapNonparametric;
using codearena::rating::BootstrapParametric;
using codearena::rating::BootstrapReport;
using codearena::rating::Covariance;
using codearena::rating::Fit;
using codearena::rating::ToElo;
using codearena::rating::FitOptions;
using codearena::rating::MatchupResult;
using codearena::rating::RankingFromRatings;
using codearena::rating::WinMatrix;

std::vector<MatchupResult> MixedResults() {
  std::vector<MatchupResult> results;
  for (int i = 0; i < 7; ++i) results.push_back({"a", "b", "a"});
  for (int i = 0; i < 3; ++i) results.push_back({"a", "b", "b"});
  return results;
}

}  // namespace

TEST_CASE("nonparametric bootstrap is deterministic under one seed") {
  auto results = MixedResults();
  Rng rng1(5);
  Rng rng2(5);
  BootstrapReport r1 = BootstrapNonparametric(results, 50, rng1);
  BootstrapReport r2 = BootstrapNonparametric(results, 50, rng2);
  REQUIRE(r1.elo_samples.size() == r2.elo_samples.size());
  for (std::size_t i = 0; i < r1.elo_samples.size(); ++i) {
    CHECK(r1.elo_samples[i] == r2.elo_samples[i]);
  }
  CHECK(r1.samples_failed == r2.samples_failed);
}

TEST_CASE("identical tournaments resample to zero variance") {
  // Every resample reproduces the same degenerate matrix; only a
  // pseudo-count keeps those refits finite, and then every sample agrees.
  std::vector<MatchupResult> identical(10, {"a", "b", "a"});
  Rng rng(17);
  FitOptions opts;
  opts.pseudo_count = 1.0;
  BootstrapReport report = BootstrapNonparametric(identical, 40, rng, opts);
  CHECK(report.samples_failed == 0);
  REQUIRE(report.elo_samples.size() == 40);
  // Identical samples; the tiny residue is mean-accumulation round-off.
  CHECK(report.sd[0] <= 1e-9);
  CHECK(report.sd[1] <= 1e-9);
  for (const auto& row : report.elo_samples) {
    CHECK(row == report.elo_samples.front());
  }
}

TEST_CASE("separated resamples are excluded and counted") {
  // 9:1 wins: some resamples drop b's only win and become separated.
  std::vector<MatchupResult> results;
  for (int i = 0; i < 9; ++i) results.push_back({"a", "b", "a"});
  results.push_back({"a", "b", "b"});
  Rng rng(3);
  BootstrapReport report = BootstrapNonparametric(results, 200, rng);
  CHECK(report.samples_failed > 0);
  CHECK(static_cast<int>(report.elo_samples.size()) ==
        200 - report.samples_failed);
}

TEST_CASE("all samples failing is an error") {
  std::vector<MatchupResult> hopeless(5, {"a", "b", "a"});
  Rng rng(1);
  CHECK_THROWS_AS(BootstrapNonparametric(hopeless, 10, rng), DataError);
}

TEST_CASE("parametric bootstrap preserves the matchup graph") {
  WinMatrix m({"a", "b", "c"},
              {{0, 30, 0}, {20, 0, 28}, {0, 22, 0}});  // a-c never played
  auto fit = Fit(m);
  Rng rng(11);
  BootstrapReport report = BootstrapParametric(fit, m, 300, rng);
  CHECK(report.elo_samples.size() + report.samples_failed == 300);
  CHECK(report.elo_samples.size() > 250);  // failures are rare here
  // Variability exists (unlike the degenerate case).
  CHECK(report.sd[0] > 0.0);
}

TEST_CASE("parametric bootstrap SD tracks the analytic standard error") {
  // Well-conditioned: n_ij = 100 per pair, probabilities inside
  // [0.3, 0.7]. Agreement within 15 percent relative.
  WinMatrix m({"a", "b", "c"},
              {{0, 60, 55}, {40, 0, 58}, {45, 42, 0}});
  auto fit = Fit(m);
  auto cov = Covariance(fit, m);
  auto elo = ToElo(fit, &cov);
  Rng rng(29);
  BootstrapReport report = BootstrapParametric(fit, m, 500, rng);
  for (std::size_t i = 0; i < elo.se.size(); ++i) {
    CHECK(std::abs(report.sd[i] - elo.se[i]) / elo.se[i] < 0.15);
  }
}

TEST_CASE("an eight-player season produces a stable, sane ranking") {
  // Season-sized data: 8 players, every pair meets 10 times, outcomes
  // drawn from a fixed strength ladder. Checks the full pipeline at a
  // realistic scale: fit, covariance, both bootstraps, stability.
  const int n = 8;
  std::vector<double> true_s(n);
  for (int i = 0; i < n; ++i) true_s[i] = (i - 3.5) * 0.35;
  Rng rng(20260811);
  std::vector<MatchupResult> season;
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("m" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = 1.0 / (1.0 + std::exp(true_s[j] - true_s[i]));
      for (int g = 0; g < 10; ++g) {
        season.push_back({ids[i], ids[j],
                          rng.Bernoulli(p) ? ids[i] : ids[j]});
      }
    }
  }
  WinMatrix m = WinMatrix::FromResults(season);
  auto fit = Fit(m);
  REQUIRE(fit.converged);
  auto cov = Covariance(fit, m);
  auto elo = ToElo(fit, &cov);

  // The strongest true player should rank on top of the fit.
  auto ranking = RankingFromRatings(elo.rating);
  CHECK(m.ids()[ranking.front()] == "m7");
  CHECK(m.ids()[ranking.back()] == "m0");

  auto nonparam = BootstrapNonparametric(season, 1000, rng);
  auto reference = RankingFromRatings(elo.rating);
  auto stability =
      codearena::rating::Stability(reference, nonparam.rank_samples);
  // Shape expectations only: a season this size pins the ranking tightly.
  CHECK(stability.kendall_tau > 0.8);
  CHECK(stability.pairwise_order_agreement > 0.9);
  CHECK(stability.footrule_normalized < 0.15);

  auto param = BootstrapParametric(fit, m, 1000, rng);
  for (int i = 0; i < n; ++i) {
    CHECK(param.sd[i] > 0.0);
    CHECK(param.sd[i] < 200.0);
    // Analytic and parametric-bootstrap uncertainties stay in the same
    // ballpark at this scale.
    CHECK(std::abs(param.sd[i] - elo.se[i]) / elo.se[i] < 0.35);
  }
}

TEST_CASE("rankings order by rating with index tie-break") {
  auto ranking = RankingFromRatings({1200.0, 1350.0, 1350.0, 900.0});
  CHECK(ranking == codearena::rating::Ranking{1, 2, 0, 3});
}
