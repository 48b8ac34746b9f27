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

#ifndef CODEARENA_RATING_BRADLEY_TERRY_HPP_
#define CODEARENA_RATING_BRADLEY_TERRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rating/win_matrix.hpp"

namespace codearena::rating {

// Elo presentation constants: R_i = kEloBase + (kEloSlope / ln 10) * s_i.
inline constexpr double kEloBase = 1200.0;
inline constexpr double kEloSlope = 400.0;

// Slope / ln 10, the strength-to-rating scale factor.
double EloScale();

struct FitOptions {
  // Added to every off-diagonal win count; biases the fit but keeps the
  // MLE finite under separation.
  double pseudo_count = 0.0;
  // Convergence: infinity norm of the log-likelihood gradient.
  double tol = 1e-10;
  int max_iter = 500;
  // Optional initializer for the strengths (gauge-fixed internally).
  std::optional<std::vector<double>> initial;
};

struct PlayerSeparation {
  bool all_wins = false;
  bool all_losses = false;
};

struct StrengthFit {
  std::vector<std::string> ids;
  std::vector<double> s;  // sum-zero gauge
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<PlayerSeparation> separation_flags;

  bool any_separation() const;
};

struct CovarianceReport {
  // Strength covariance on the sum-zero subspace; annihilates the all-ones
  // direction.
  std::vector<std::vector<double>> sigma;
  std::vector<double> se;  // sqrt of the diagonal
};

struct EloReport {
  std::vector<std::string> ids;
  std::vector<double> rating;
  std::vector<double> se;  // empty when no covariance was supplied
};

// Maximum-likelihood Bradley-Terry strengths under the sum-zero gauge.
// log L = sum_{i<j} [w_ij log sigma(s_i - s_j) + w_ji log sigma(s_j - s_i)].
//
// Throws DataError when the comparison graph is disconnected and
// SeparationError when the MLE diverges (unless pseudo_count > 0).
StrengthFit Fit(const WinMatrix& w, const FitOptions& options = {});

// Strength covariance from the inverse of the Fisher information,
// restricted to the gauge subspace.
CovarianceReport Covariance(const StrengthFit& fit, const WinMatrix& w);

EloReport ToElo(const StrengthFit& fit,
                const CovarianceReport* cov = nullptr);

// P(player i beats player j) under the fit.
double Predict(const StrengthFit& fit, int i, int j);

double LogLikelihood(const WinMatrix& w, const std::vector<double>& s,
                     double pseudo_count = 0.0);

}  // namespace codearena::rating

#endif  // CODEARENA_RATING_BRADLEY_TERRY_HPP_
