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

#include "rating/bradley_terry.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "rating/win_matrix.hpp"
#include "util/errors.hpp"
#include "util/rng.hpp"

namespace {

using codearena::DataError;
using codearena::Rng;
using codearena::SeparationError;
using codearena::rating::Covariance;
using codearena::rating::EloScale;
using codearena::rating::Fit;
using codearena::rating::FitOptions;
using codearena::rating::LogLikelihood;
using codearena::rating::MatchupResult;
using codearena::rating::Predict;
using codearena::rating::StrengthFit;
using codearena::rating::ToElo;
using codearena::rating::WinMatrix;

WinMatrix Matrix2(double w12, double w21) {
  return WinMatrix({"a", "b"}, {{0, w12}, {w21, 0}});
}

// Coarse grid search over the gauge subspace: the independent check that
// the optimizer lands on the likelihood maximum for three players.
std::vector<double> GridSearchFit3(const WinMatrix& w, double span,
                                   double step) {
  std::vector<double> best{0, 0, 0};
  double best_ll = -1e300;
  for (double s1 = -span; s1 <= span; s1 += step) {
    for (double s2 = -span; s2 <= span; s2 += step) {
      std::vector<double> s{s1, s2, -s1 - s2};
      double ll = LogLikelihood(w, s);
      if (ll > best_ll) {
        best_ll = ll;
        best = s;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("two-player fit matches the closed form") {
  // s1 - s2 = logit(7/10) = ln(7/3).
  StrengthFit fit = Fit(Matrix2(7, 3));
  CHECK(fit.converged);
  double expected = 0.5 * std::log(7.0 / 3.0);
  CHECK(fit.s[0] == doctest::Approx(expected).epsilon(1e-9));
  CHECK(fit.s[1] == doctest::Approx(-expected).epsilon(1e-9));
  CHECK(std::abs(fit.s[0] + fit.s[1]) <= 1e-9);
  CHECK(Predict(fit, 0, 1) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("balanced wins give zero strengths") {
  StrengthFit fit = Fit(Matrix2(5, 5));
  CHECK(fit.s[0] == doctest::Approx(0.0));
  CHECK(fit.s[1] == doctest::Approx(0.0));
}

TEST_CASE("fit is invariant to a shifted initializer") {
  FitOptions plain;
  StrengthFit base = Fit(Matrix2(7, 3), plain);
  FitOptions shifted;
  shifted.initial = std::vector<double>{5.0, 5.0};
  StrengthFit moved = Fit(Matrix2(7, 3), shifted);
  CHECK(Predict(base, 0, 1) ==
        doctest::Approx(Predict(moved, 0, 1)).epsilon(1e-9));
}

TEST_CASE("closed form holds for random two-player matrices") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    double w12 = 1 + static_cast<double>(rng.UniformBelow(40));
    double w21 = 1 + static_cast<double>(rng.UniformBelow(40));
    StrengthFit fit = Fit(Matrix2(w12, w21));
    double expected = 0.5 * std::log(w12 / w21);
    CHECK(fit.s[0] == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("three-player fit agrees with a grid-search oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::vector<double>> w(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) w[i][j] = 1 + static_cast<double>(rng.UniformBelow(20));
      }
    }
    WinMatrix matrix({"a", "b", "c"}, std::move(w));
    StrengthFit fit = Fit(matrix);
    std::vector<double> grid = GridSearchFit3(matrix, 2.0, 0.01);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(fit.s[i] - grid[i]) <= 0.02);
    }
  }
}

TEST_CASE("adding a win never lowers the winner's strength") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng.UniformBelow(2));
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) w[i][j] = 1 + static_cast<double>(rng.UniformBelow(10));
      }
    }
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::string(1, 'a' + i));
    WinMatrix base(ids, w);
    int i = static_cast<int>(rng.UniformBelow(n));
    int j = (i + 1 + static_cast<int>(rng.UniformBelow(n - 1))) % n;
    auto bumped_w = w;
    bumped_w[i][j] += 1;
    WinMatrix bumped(ids, bumped_w);
    StrengthFit before = Fit(base);
    StrengthFit after = Fit(bumped);
    CHECK(after.s[i] >= before.s[i] - 1e-9);
  }
}

TEST_CASE("label permutation permutes the fit") {
  WinMatrix m({"a", "b", "c"},
              {{0, 7, 2}, {3, 0, 4}, {5, 6, 0}});
  WinMatrix permuted({"c", "a", "b"},
                     {{0, 5, 6}, {2, 0, 7}, {4, 3, 0}});
  StrengthFit f1 = Fit(m);
  StrengthFit f2 = Fit(permuted);
  CHECK(f1.s[0] == doctest::Approx(f2.s[1]).epsilon(1e-9));
  CHECK(f1.s[1] == doctest::Approx(f2.s[2]).epsilon(1e-9));
  CHECK(f1.s[2] == doctest::Approx(f2.s[0]).epsilon(1e-9));
}

TEST_CASE("gauge holds after every fit") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.UniformBelow(4));
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) w[i][j] = 1 + static_cast<double>(rng.UniformBelow(12));
      }
    }
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::string(1, 'a' + i));
    StrengthFit fit = Fit(WinMatrix(ids, w));
    double sum = 0;
    for (double v : fit.s) sum += v;
    CHECK(std::abs(sum) <= 1e-9);
  }
}

TEST_CASE("separation is a hard error by default, soft with pseudo-counts") {
  WinMatrix separated({"a", "b"}, {{0, 5}, {0, 0}});
  CHECK_THROWS_AS(Fit(separated), SeparationError);
  FitOptions opts;
  opts.pseudo_count = 0.5;
  StrengthFit fit = Fit(separated, opts);
  CHECK(fit.converged);
  CHECK(fit.separation_flags[0].all_wins);
  CHECK(fit.separation_flags[1].all_losses);
}

TEST_CASE("disconnected graphs are not identifiable") {
  WinMatrix disconnected({"a", "b", "c", "d"},
                         {{0, 3, 0, 0}, {2, 0, 0, 0},
                          {0, 0, 0, 4}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(Fit(disconnected), DataError);
}

TEST_CASE("fits need at least two players") {
  CHECK_THROWS_AS(Fit(WinMatrix({"a"}, {{0}})), DataError);
}

TEST_CASE("covariance matches the hand-inverted two-player case") {
  // n12 = 10 at p = 0.7: Var(s1 - s2) = 1/(10 * 0.21), Var(s1) a quarter
  // of that under the sum-zero gauge.
  StrengthFit fit = Fit(Matrix2(7, 3));
  auto cov = Covariance(fit, Matrix2(7, 3));
  CHECK(cov.sigma[0][0] == doctest::Approx(0.119048).epsilon(1e-4));
  double var_diff =
      cov.sigma[0][0] + cov.sigma[1][1] - 2 * cov.sigma[0][1];
  CHECK(var_diff == doctest::Approx(1.0 / 2.1).epsilon(1e-6));
}

TEST_CASE("covariance annihilates the all-ones direction") {
  WinMatrix m({"a", "b", "c"}, {{0, 7, 2}, {3, 0, 4}, {5, 6, 0}});
  StrengthFit fit = Fit(m);
  auto cov = Covariance(fit, m);
  for (int i = 0; i < 3; ++i) {
    double row_sum = 0;
    for (int j = 0; j < 3; ++j) row_sum += cov.sigma[i][j];
    CHECK(std::abs(row_sum) < 1e-10);
  }
}

TEST_CASE("covariance matches a finite-difference Hessian oracle") {
  // Independent route: numeric second derivatives of the log-likelihood,
  // negated, projected onto the sum-zero subspace and pseudo-inverted by
  // eigendecomposition by hand.
  WinMatrix m({"a", "b", "c"}, {{0, 12, 5}, {7, 0, 9}, {6, 8, 0}});
  StrengthFit fit = Fit(m);
  auto cov = Covariance(fit, m);

  const int n = 3;
  const double h = 1e-5;
  std::vector<std::vector<double>> info(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto shifted = [&](double di, double dj) {
        std::vector<double> s = fit.s;
        s[i] += di;
        s[j] += dj;
        return LogLikelihood(m, s);
      };
      double second;
      if (i == j) {
        second = (shifted(h, 0) - 2.0 * shifted(0, 0) + shifted(-h, 0)) /
                 (h * h);
      } else {
        second = (shifted(h, h) - shifted(h, -h) - shifted(-h, h) +
                  shifted(-h, -h)) /
                 (4.0 * h * h);
      }
      info[i][j] = -second;  // Fisher information
    }
  }

  // Pseudo-inverse on the sum-zero subspace via the rank-one-shift
  // identity: (I_F + J/n)^-1 - J/n, inverted with cofactors.
  std::vector<std::vector<double>> shifted_info(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      shifted_info[i][j] = info[i][j] + 1.0 / n;
    }
  }
  auto det3 = [](const std::vector<std::vector<double>>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  double det = det3(shifted_info);
  REQUIRE(std::abs(det) > 1e-12);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Cofactor expansion for the (j, i) entry of the inverse.
      std::vector<std::vector<double>> minor(2, std::vector<double>(2));
      int rows[2], cols[2], r = 0, c;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows[r++] = k;
      }
      c = 0;
      for (int k = 0; k < n; ++k) {
        if (k != i) cols[c++] = k;
      }
      for (int rr = 0; rr < 2; ++rr) {
        for (int cc = 0; cc < 2; ++cc) {
          minor[rr][cc] = shifted_info[rows[rr]][cols[cc]];
        }
      }
      double cofactor =
          (minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]) *
          (((i + j) % 2 == 0) ? 1.0 : -1.0);
      double inverse_entry = cofactor / det;
      double expected_sigma = inverse_entry - 1.0 / n;
      CHECK(cov.sigma[i][j] ==
            doctest::Approx(expected_sigma).epsilon(1e-4));
    }
  }
}

TEST_CASE("doubling every game count halves every variance") {
  WinMatrix m({"a", "b", "c"}, {{0, 8, 3}, {4, 0, 5}, {3, 7, 0}});
  WinMatrix doubled({"a", "b", "c"}, {{0, 16, 6}, {8, 0, 10}, {6, 14, 0}});
  StrengthFit fit = Fit(m);
  StrengthFit fit2 = Fit(doubled);
  auto cov = Covariance(fit, m);
  auto cov2 = Covariance(fit2, doubled);
  for (int i = 0; i < 3; ++i) {
    CHECK(cov2.sigma[i][i] ==
          doctest::Approx(cov.sigma[i][i] / 2.0).epsilon(1e-6));
  }
}

TEST_CASE("elo conversion is the pinned affine map") {
  StrengthFit zero;
  zero.ids = {"a", "b"};
  zero.s = {0.0, 0.0};
  zero.converged = true;
  auto elo = ToElo(zero);
  CHECK(elo.rating[0] == 1200.0);
  CHECK(elo.rating[1] == 1200.0);

  StrengthFit fit = Fit(Matrix2(7, 3));
  auto cov = Covariance(fit, Matrix2(7, 3));
  auto report = ToElo(fit, &cov);
  CHECK(report.rating[0] == doctest::Approx(1273.594).epsilon(1e-5));
  CHECK(report.rating[1] == doctest::Approx(1126.406).epsilon(1e-5));
  // Rating gap cross-check: 400*log10(7/3).
  CHECK(report.rating[0] - report.rating[1] ==
        doctest::Approx(400.0 * std::log10(7.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("elo standard error scales by the slope factor") {
  CHECK(EloScale() == doctest::Approx(173.7178).epsilon(1e-6));
  CHECK(0.34504 * EloScale() == doctest::Approx(59.94).epsilon(1e-3));
}

TEST_CASE("predict follows the rating-gap identity") {
  StrengthFit fit;
  fit.ids = {"a", "b"};
  fit.converged = true;
  // A 400-point rating gap corresponds to p = 10/11.
  fit.s = {400.0 / EloScale() / 2.0, -400.0 / EloScale() / 2.0};
  CHECK(Predict(fit, 0, 1) == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
  CHECK(Predict(fit, 0, 1) + Predict(fit, 1, 0) ==
        doctest::Approx(1.0).epsilon(1e-15));

  fit.s = {0.1, 0.1};
  CHECK(Predict(fit, 0, 1) == 0.5);
}

TEST_CASE("elo affine identity links predict and ratings") {
  WinMatrix m({"a", "b", "c"}, {{0, 9, 4}, {3, 0, 6}, {5, 2, 0}});
  StrengthFit fit = Fit(m);
  auto elo = ToElo(fit);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      double via_rating =
          1.0 / (1.0 + std::pow(10.0, -(elo.rating[i] - elo.rating[j]) / 400.0));
      CHECK(Predict(fit, i, j) == doctest::Approx(via_rating).epsilon(1e-12));
    }
  }
}

TEST_CASE("win matrix building and round trips") {
  std::vector<MatchupResult> results = {
      {"a", "b", "a"}, {"a", "b", "a"}, {"a", "b", "b"}, {"a", "b", ""}};
  WinMatrix m = WinMatrix::FromResults(results);
  CHECK(m.wins(0, 1) == 2.0);  // draws excluded
  CHECK(m.wins(1, 0) == 1.0);
  CHECK(m.games(0, 1) == 3.0);

  WinMatrix split = WinMatrix::FromResults(results, true);
  CHECK(split.wins(0, 1) == 2.5);
  CHECK(split.wins(1, 0) == 1.5);

  WinMatrix parsed = WinMatrix::FromCsv(m.ToCsv());
  CHECK(parsed.ids() == m.ids());
  CHECK(parsed.wins(0, 1) == m.wins(0, 1));
  CHECK(parsed.wins(1, 0) == m.wins(1, 0));

  CHECK_THROWS_AS(WinMatrix::FromResults({}), DataError);
  CHECK_THROWS_AS(
      WinMatrix::FromResultsWithIds({{"a", "x", "a"}}, {"a", "b"}, false),
      DataError);
}
