// Copyright 2026 bigm developers
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

#include "bigm/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bigm {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kDegenTol = 1e-9;
constexpr int kBlandTrigger = 50;

enum class ColStatus { AtLower, AtUpper, Basic };

// Bounded-variable primal simplex over the equality form A x = b with
// box bounds on every column. The basis matrix is refactorized each
// iteration; problem sizes here are small enough that robustness wins
// over speed.
class Simplex {
 public:
  Simplex(Eigen::MatrixXd a, Eigen::VectorXd b, std::vector<double> lo,
          std::vector<double> hi)
      : a_(std::move(a)),
        b_(std::move(b)),
        lo_(std::move(lo)),
        hi_(std::move(hi)),
        m_(static_cast<int>(a_.rows())),
        n_(static_cast<int>(a_.cols())) {}

  // Runs phase 1 (artificial variables) then phase 2 with `cost`.
  // Returns false when the constraints are infeasible.
  bool optimize(const std::vector<double>& cost) {
    setup_artificials();
    std::vector<double> phase1(static_cast<std::size_t>(n_) + m_, 0.0);
    for (int j = n_; j < n_ + m_; ++j) phase1[j] = -1.0;
    run(phase1);
    if (artificial_sum() > kLpFeasTol) return false;
    for (int j = n_; j < n_ + m_; ++j) {  // freeze artificials at zero
      hi_[j] = 0.0;
      if (status_[j] != ColStatus::Basic) {
        status_[j] = ColStatus::AtLower;
        x_[j] = 0.0;
      }
    }
    std::vector<double> phase2(cost);
    phase2.resize(static_cast<std::size_t>(n_) + m_, 0.0);
    run(phase2);
    return true;
  }

  // Value of column j after optimize().
  double value(int j) const { return x_[j]; }

 private:
  void setup_artificials() {
    status_.assign(static_cast<std::size_t>(n_) + m_, ColStatus::AtLower);
    x_.assign(static_cast<std::size_t>(n_) + m_, 0.0);
    basis_.resize(m_);
    art_sign_.assign(m_, 1.0);
    lo_.resize(static_cast<std::size_t>(n_) + m_, 0.0);
    hi_.resize(static_cast<std::size_t>(n_) + m_, 0.0);

    for (int j = 0; j < n_; ++j) x_[j] = lo_[j];
    Eigen::VectorXd residual = b_;
    for (int j = 0; j < n_; ++j) {
      if (x_[j] != 0.0) residual -= a_.col(j) * x_[j];
    }
    for (int i = 0; i < m_; ++i) {
      art_sign_[i] = residual(i) >= 0.0 ? 1.0 : -1.0;
      int j = n_ + i;
      lo_[j] = 0.0;
      hi_[j] = std::abs(residual(i));
      x_[j] = hi_[j];
      basis_[i] = j;
      status_[j] = ColStatus::Basic;
    }
  }

  double artificial_sum() const {
    double sum = 0.0;
    for (int j = n_; j < n_ + m_; ++j) sum += std::abs(x_[j]);
    return sum;
  }

  Eigen::VectorXd column(int j) const {
    if (j < n_) return a_.col(j);
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(m_);
    unit(j - n_) = art_sign_[j - n_];
    return unit;
  }

  void refresh_basics(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
    Eigen::VectorXd rhs = b_;
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == ColStatus::Basic || x_[j] == 0.0) continue;
      rhs -= column(j) * x_[j];
    }
    Eigen::VectorXd xb = lu.solve(rhs);
    for (int i = 0; i < m_; ++i) x_[basis_[i]] = xb(i);
  }

  void run(const std::vector<double>& cost) {
    const int total = n_ + m_;
    const long iter_cap = 20000L + 200L * total;
    int degenerate_streak = 0;
    bool bland = false;

    for (long iter = 0; iter < iter_cap; ++iter) {
      Eigen::MatrixXd basis_matrix(m_, m_);
      for (int i = 0; i < m_; ++i) basis_matrix.col(i) = column(basis_[i]);
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
      refresh_basics(lu);

      Eigen::VectorXd cb(m_);
      for (int i = 0; i < m_; ++i) cb(i) = cost[basis_[i]];
      Eigen::VectorXd y =
          Eigen::PartialPivLU<Eigen::MatrixXd>(basis_matrix.transpose())
              .solve(cb);

      int entering = -1;
      double best_score = 0.0;
      for (int j = 0; j < total; ++j) {
        if (status_[j] == ColStatus::Basic || lo_[j] == hi_[j]) continue;
        double reduced = cost[j] - y.dot(column(j));
        bool eligible =
            (status_[j] == ColStatus::AtLower && reduced > kLpOptTol) ||
            (status_[j] == ColStatus::AtUpper && reduced < -kLpOptTol);
        if (!eligible) continue;
        if (bland) {
          entering = j;
          break;
        }
        double score = std::abs(reduced);
        if (score > best_score + kLpOptTol) {
          best_score = score;
          entering = j;
        }
      }
      if (entering < 0) return;  // optimal for this phase

      const double dir =
          status_[entering] == ColStatus::AtLower ? 1.0 : -1.0;
      Eigen::VectorXd w = lu.solve(column(entering));

      // Ratio test: step t >= 0 along the entering direction until the
      // entering column's opposite bound or a basic column's bound blocks.
      double t = hi_[entering] - lo_[entering];
      int blocking = -1;  // basis position
      for (int i = 0; i < m_; ++i) {
        double delta = -w(i) * dir;  // change of basic i per unit step
        double limit = std::numeric_limits<double>::infinity();
        if (delta > kPivotTol) {
          limit = (hi_[basis_[i]] - x_[basis_[i]]) / delta;
        } else if (delta < -kPivotTol) {
          limit = (x_[basis_[i]] - lo_[basis_[i]]) / (-delta);
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        if (limit < t - kPivotTol ||
            (limit < t + kPivotTol && blocking >= 0 &&
             basis_[i] < basis_[blocking])) {
          t = limit;
          blocking = i;
        }
      }

      if (blocking < 0) {
        // bound flip, basis unchanged
        x_[entering] = dir > 0 ? hi_[entering] : lo_[entering];
        status_[entering] =
            dir > 0 ? ColStatus::AtUpper : ColStatus::AtLower;
        degenerate_streak = 0;
        bland = false;
        continue;
      }

      x_[entering] =
          (status_[entering] == ColStatus::AtLower ? lo_[entering]
                                                   : hi_[entering]) +
          dir * t;
      for (int i = 0; i < m_; ++i) x_[basis_[i]] += -w(i) * dir * t;

      int leaving = basis_[blocking];
      double leave_delta = -w(blocking) * dir;
      status_[leaving] =
          leave_delta > 0 ? ColStatus::AtUpper : ColStatus::AtLower;
      x_[leaving] = leave_delta > 0 ? hi_[leaving] : lo_[leaving];
      basis_[blocking] = entering;
      status_[entering] = ColStatus::Basic;

      if (t <= kDegenTol) {
        if (++degenerate_streak >= kBlandTrigger) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
    }
    raise(ErrorCode::NumericalFailure,
          "simplex exceeded the iteration cap; pivot safeguards exhausted");
  }

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  int m_ = 0;
  int n_ = 0;
  std::vector<int> basis_;
  std::vector<ColStatus> status_;
  std::vector<double> x_;
  std::vector<double> art_sign_;
};

double row_activity(const LpRow& row, std::span<const double> point) {
  double sum = 0.0;
  for (const auto& [var, coef] : row.terms) sum += coef * point[var];
  return sum;
}

void verify_point(const LpProblem& problem, std::span<const double> lo,
                  std::span<const double> hi,
                  const std::vector<double>& point) {
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (point[j] < lo[j] - kLpBoundTol || point[j] > hi[j] + kLpBoundTol) {
      raise(ErrorCode::NumericalFailure,
            "solved point violates a variable bound beyond tolerance");
    }
  }
  for (const LpRow& row : problem.rows) {
    double activity = row_activity(row, point);
    bool ok = true;
    switch (row.sense) {
      case Sense::LE: ok = activity <= row.rhs + kLpFeasTol; break;
      case Sense::GE: ok = activity >= row.rhs - kLpFeasTol; break;
      case Sense::EQ: ok = std::abs(activity - row.rhs) <= kLpFeasTol; break;
    }
    if (!ok) {
      raise(ErrorCode::NumericalFailure,
            "solved point violates a row beyond tolerance");
    }
  }
}

}  // namespace

LpProblem relax(const Model& model) {
  require_valid(model);
  LpProblem problem;
  problem.lo.reserve(model.num_vars());
  problem.hi.reserve(model.num_vars());
  for (const Variable& v : model.variables()) {
    problem.lo.push_back(static_cast<double>(v.lo));
    problem.hi.push_back(static_cast<double>(v.hi));
  }
  for (const LinearConstraint& row : model.constraints()) {
    LpRow lp_row;
    lp_row.sense = row.sense;
    lp_row.rhs = static_cast<double>(row.rhs);
    for (const LinearTerm& term : row.terms) {
      lp_row.terms.emplace_back(static_cast<int>(term.var.index),
                                static_cast<double>(term.coef));
    }
    problem.rows.push_back(std::move(lp_row));
  }
  problem.sense = model.objective().sense;
  problem.objective.assign(model.num_vars(), 0.0);
  for (const LinearTerm& term : model.objective().terms) {
    problem.objective[term.var.index] += static_cast<double>(term.coef);
  }
  return problem;
}

LpOutcome solve_lp(const LpProblem& problem) {
  return solve_lp(problem, problem.lo, problem.hi);
}

LpOutcome solve_lp(const LpProblem& problem, std::span<const double> lo,
                   std::span<const double> hi) {
  const int n = static_cast<int>(lo.size());
  const int m = static_cast<int>(problem.rows.size());

  for (int j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return LpOutcome{LpStatus::Infeasible, {}, 0.0};
  }

  // Equality form: one slack column per inequality row, with implied
  // finite bounds derived from the variable box.
  int num_slacks = 0;
  for (const LpRow& row : problem.rows) {
    if (row.sense != Sense::EQ) ++num_slacks;
  }
  const int total = n + num_slacks;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, total);
  Eigen::VectorXd b(m);
  std::vector<double> col_lo(lo.begin(), lo.end());
  std::vector<double> col_hi(hi.begin(), hi.end());
  col_lo.resize(total, 0.0);
  col_hi.resize(total, 0.0);

  int slack = n;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = problem.rows[i];
    double act_lo = 0.0;
    double act_hi = 0.0;
    for (const auto& [var, coef] : row.terms) {
      a(i, var) += coef;
      act_lo += std::min(coef * lo[var], coef * hi[var]);
      act_hi += std::max(coef * lo[var], coef * hi[var]);
    }
    b(i) = row.rhs;
    if (row.sense == Sense::LE) {
      a(i, slack) = 1.0;
      col_lo[slack] = 0.0;
      col_hi[slack] = std::max(0.0, row.rhs - act_lo);
      ++slack;
    } else if (row.sense == Sense::GE) {
      a(i, slack) = 1.0;
      col_lo[slack] = std::min(0.0, row.rhs - act_hi);
      col_hi[slack] = 0.0;
      ++slack;
    }
  }

  std::vector<double> cost(total, 0.0);
  const double sign = problem.sense == ObjectiveSense::Minimize ? -1.0 : 1.0;
  for (int j = 0; j < n && j < static_cast<int>(problem.objective.size());
       ++j) {
    cost[j] = sign * problem.objective[j];
  }

  Simplex simplex(std::move(a), std::move(b), std::move(col_lo),
                  std::move(col_hi));
  if (!simplex.optimize(cost)) {
    return LpOutcome{LpStatus::Infeasible, {}, 0.0};
  }

  LpOutcome outcome;
  outcome.status = LpStatus::Optimal;
  outcome.point.resize(n);
  for (int j = 0; j < n; ++j) outcome.point[j] = simplex.value(j);
  verify_point(problem, lo, hi, outcome.point);
  double value = 0.0;
  for (int j = 0; j < n && j < static_cast<int>(problem.objective.size());
       ++j) {
    value += problem.objective[j] * outcome.point[j];
  }
  outcome.objective = value;
  return outcome;
}

}  // namespace bigm
