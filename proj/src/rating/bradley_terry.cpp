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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "util/errors.hpp"

namespace codearena::rating {

namespace {

constexpr double kDivergenceBound = 30.0;

double Sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log sigma(x) = -log(1 + exp(-x)), stable for large |x|.
double LogSigmoid(double x) {
  if (x > 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

void Recenter(std::vector<double>& s) {
  double mean = std::accumulate(s.begin(), s.end(), 0.0) /
                static_cast<double>(s.size());
  for (double& v : s) v -= mean;
}

// Effective win count with the pseudo-count applied to every pair.
double EffWins(const WinMatrix& w, double pseudo, int i, int j) {
  return w.wins(i, j) + pseudo;
}

std::vector<double> Gradient(const WinMatrix& w, double pseudo,
                             const std::vector<double>& s) {
  const int n = w.size();
  std::vector<double> g(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double wij = EffWins(w, pseudo, i, j);
      double nij = wij + EffWins(w, pseudo, j, i);
      if (nij == 0.0) continue;
      g[i] += wij - nij * Sigmoid(s[i] - s[j]);
    }
  }
  return g;
}

double InfNorm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Fisher information (negated log-likelihood Hessian): the graph Laplacian
// weighted by n_ij p_ij (1 - p_ij). Singular along the all-ones direction.
Eigen::MatrixXd FisherInformation(const WinMatrix& w, double pseudo,
                                  const std::vector<double>& s) {
  const int n = w.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double nij = EffWins(w, pseudo, i, j) + EffWins(w, pseudo, j, i);
      if (nij == 0.0) continue;
      double p = Sigmoid(s[i] - s[j]);
      double weight = nij * p * (1.0 - p);
      h(i, i) += weight;
      h(j, j) += weight;
      h(i, j) -= weight;
      h(j, i) -= weight;
    }
  }
  return h;
}

// One minorization-maximization sweep (Hunter 2004, Eq. 4) in gamma space.
// Monotone in the likelihood; used when a Newton step fails to improve.
bool MmSweep(const WinMatrix& w, double pseudo, std::vector<double>& s) {
  const int n = w.size();
  std::vector<double> gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = std::exp(s[i]);
  std::vector<double> next(n);
  for (int i = 0; i < n; ++i) {
    double total_wins = 0.0;
    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double wij = EffWins(w, pseudo, i, j);
      double nij = wij + EffWins(w, pseudo, j, i);
      if (nij == 0.0) continue;
      total_wins += wij;
      denom += nij / (gamma[i] + gamma[j]);
    }
    if (denom == 0.0 || total_wins == 0.0) return false;
    next[i] = total_wins / denom;
  }
  for (int i = 0; i < n; ++i) s[i] = std::log(next[i]);
  Recenter(s);
  return true;
}

}  // namespace

double EloScale() { return kEloSlope / std::log(10.0); }

bool StrengthFit::any_separation() const {
  for (const auto& f : separation_flags) {
    if (f.all_wins || f.all_losses) return true;
  }
  return false;
}

double LogLikelihood(const WinMatrix& w, const std::vector<double>& s,
                     double pseudo_count) {
  const int n = w.size();
  double ll = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double wij = EffWins(w, pseudo_count, i, j);
      double wji = EffWins(w, pseudo_count, j, i);
      if (wij + wji == 0.0) continue;
      double d = s[i] - s[j];
      ll += wij * LogSigmoid(d) + wji * LogSigmoid(-d);
    }
  }
  return ll;
}

StrengthFit Fit(const WinMatrix& w, const FitOptions& options) {
  const int n = w.size();
  if (n < 2) throw DataError("Bradley-Terry fit needs at least 2 players");
  const double pseudo = options.pseudo_count;
  if (pseudo < 0.0) throw DataError("pseudo_count must be non-negative");

  {
    // Connectivity is evaluated on the effective counts: a positive
    // pseudo-count links every pair.
    bool connected = pseudo > 0.0 ? true : w.IsConnected();
    if (!connected) {
      throw DataError(
          "comparison graph is disconnected; strengths are not jointly "
          "identifiable");
    }
  }

  StrengthFit fit;
  fit.ids = w.ids();
  fit.separation_flags.resize(n);
  for (int i = 0; i < n; ++i) {
    double wins = 0.0, losses = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      wins += w.wins(i, j);
      losses += w.wins(j, i);
    }
    fit.separation_flags[i].all_wins = wins > 0.0 && losses == 0.0;
    fit.separation_flags[i].all_losses = losses > 0.0 && wins == 0.0;
  }
  if (pseudo == 0.0 && fit.any_separation()) {
    // Any flagged player drives its strength to infinity; with small
    // counts the gradient can fall under tol before the divergence bound
    // trips, so the degenerate matrix is rejected up front.
    std::string who;
    for (int i = 0; i < n; ++i) {
      if (fit.separation_flags[i].all_wins ||
          fit.separation_flags[i].all_losses) {
        if (!who.empty()) who += ", ";
        who += w.ids()[i];
      }
    }
    throw SeparationError("win matrix is separated (" + who +
                          "); set pseudo_count > 0 to regularize");
  }

  std::vector<double> s(n, 0.0);
  if (options.initial) {
    if (static_cast<int>(options.initial->size()) != n) {
      throw DataError("initializer size does not match player count");
    }
    s = *options.initial;
  }
  Recenter(s);

  const Eigen::MatrixXd ones_shift =
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));

  double ll = LogLikelihood(w, s, pseudo);
  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    std::vector<double> g = Gradient(w, pseudo, s);
    if (InfNorm(g) <= options.tol) {
      fit.converged = true;
      break;
    }
    if (InfNorm(s) > kDivergenceBound && pseudo == 0.0) {
      throw SeparationError(
          "Bradley-Terry MLE diverged (a player wins or loses everything); "
          "set pseudo_count > 0 to regularize");
    }

    // Newton ascent restricted to the gauge: the Fisher matrix plus a
    // rank-one shift along the all-ones direction is positive definite,
    // and since the gradient sums to zero the step stays sum-zero.
    bool stepped = false;
    Eigen::MatrixXd h = FisherInformation(w, pseudo, s) + ones_shift;
    Eigen::VectorXd gv(n);
    for (int i = 0; i < n; ++i) gv(i) = g[i];
    Eigen::LLT<Eigen::MatrixXd> llt(h);
    if (llt.info() == Eigen::Success) {
      Eigen::VectorXd d = llt.solve(gv);
      // Near the optimum the likelihood plateaus at rounding level while
      // the Newton direction still shrinks the gradient, so ties within
      // machine precision are accepted.
      const double slack = 1e-12 * (1.0 + std::abs(ll));
      double t = 1.0;
      for (int halvings = 0; halvings < 40; ++halvings, t *= 0.5) {
        std::vector<double> trial(n);
        for (int i = 0; i < n; ++i) trial[i] = s[i] + t * d(i);
        Recenter(trial);
        double trial_ll = LogLikelihood(w, trial, pseudo);
        if (trial_ll >= ll - slack) {
          s = std::move(trial);
          ll = trial_ll;
          stepped = true;
          break;
        }
      }
    }
    if (!stepped) {
      if (!MmSweep(w, pseudo, s)) {
        // No finite maximizer along some coordinate; the divergence guard
        // above reports it once the strengths drift far enough.
        break;
      }
      ll = LogLikelihood(w, s, pseudo);
    }
  }

  Recenter(s);
  fit.s = std::move(s);
  fit.loglik = ll;
  fit.iterations = iter;
  if (!fit.converged) {
    std::vector<double> g = Gradient(w, pseudo, fit.s);
    fit.converged = InfNorm(g) <= options.tol;
  }
  if (!fit.converged && InfNorm(fit.s) > kDivergenceBound && pseudo == 0.0) {
    throw SeparationError(
        "Bradley-Terry MLE diverged (a player wins or loses everything); "
        "set pseudo_count > 0 to regularize");
  }
  return fit;
}

CovarianceReport Covariance(const StrengthFit& fit, const WinMatrix& w) {
  const int n = w.size();
  if (static_cast<int>(fit.s.size()) != n) {
    throw DataError("fit and win matrix sizes differ");
  }
  if (!fit.converged) {
    throw DataError("covariance requires a converged fit");
  }
  if (fit.any_separation()) {
    throw SeparationError(
        "covariance undefined under separation (diverging strengths)");
  }

  // Invert the Fisher information on the sum-zero subspace. With
  // P1 = ones/n, (I_F + P1) is positive definite and
  //   Sigma = (I_F + P1)^-1 - P1
  // equals the projected inverse Z (Z^T I_F Z)^-1 Z^T exactly when the
  // null space of I_F is the all-ones direction.
  Eigen::MatrixXd info = FisherInformation(w, 0.0, fit.s);
  const Eigen::MatrixXd p1 =
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  Eigen::LDLT<Eigen::MatrixXd> ldlt(info + p1);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw NumericalError("projected Hessian is not positive definite");
  }
  Eigen::VectorXd d = ldlt.vectorD();
  double dmin = d.minCoeff();
  double dmax = d.maxCoeff();
  if (dmin <= 0.0 || dmin / dmax < 1e-14) {
    throw NumericalError(
        "projected Hessian is numerically singular (pivot ratio " +
        std::to_string(dmin / dmax) + ")");
  }
  Eigen::MatrixXd sigma =
      ldlt.solve(Eigen::MatrixXd::Identity(n, n)) - p1;
  // Symmetrize away solver round-off.
  sigma = 0.5 * (sigma + sigma.transpose()).eval();

  CovarianceReport report;
  report.sigma.assign(n, std::vector<double>(n, 0.0));
  report.se.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) report.sigma[i][j] = sigma(i, j);
    report.se[i] = std::sqrt(std::max(0.0, sigma(i, i)));
  }
  return report;
}

EloReport ToElo(const StrengthFit& fit, const CovarianceReport* cov) {
  EloReport report;
  report.ids = fit.ids;
  const double scale = EloScale();
  report.rating.resize(fit.s.size());
  for (std::size_t i = 0; i < fit.s.size(); ++i) {
    report.rating[i] = kEloBase + scale * fit.s[i];
  }
  if (cov != nullptr) {
    report.se.resize(cov->se.size());
    for (std::size_t i = 0; i < cov->se.size(); ++i) {
      report.se[i] = scale * cov->se[i];
    }
  }
  return report;
}

double Predict(const StrengthFit& fit, int i, int j) {
  return Sigmoid(fit.s.at(i) - fit.s.at(j));
}

}  // namespace codearena::rating
