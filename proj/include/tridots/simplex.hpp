// Copyright 2026 The tridots Authors
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

#pragma once

// Dense two-phase primal simplex over exact rationals.
//
// Every constraint is first brought to a nonnegative right-hand side. A <=
// row gets a slack that starts basic; a >= row gets a surplus and an
// artificial; an = row gets an artificial. Phase one maximizes minus the sum
// of artificials, phase two the real objective (negated for minimization).
// Entering and leaving variables follow Bland's rule (lowest column index,
// ties in the ratio test broken by lowest basic index), so the method
// terminates without perturbation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tridots/errors.hpp"
#include "tridots/geometry.hpp"
#include "tridots/lp_model.hpp"
#include "tridots/rational.hpp"

namespace tridots {

inline constexpr int kDefaultLpCap = 60;

struct SimplexOptions {
  std::int64_t pivot_limit = 1'000'000;
};

namespace detail {

class Tableau {
 public:
  Tableau(const LpProblem& p, const SimplexOptions& options) : options_(options), num_structural_(p.num_vars()) {
    const std::size_t m = p.constraints.size();
    std::size_t num_slack = 0, num_art = 0;
    std::vector<bool> flip(m);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = p.constraints[i];
      flip[i] = c.rhs.sign() < 0;
      rel[i] = c.relation;
      if (flip[i] && rel[i] != Relation::kEqual) {
        rel[i] = rel[i] == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
      }
      if (rel[i] != Relation::kEqual) ++num_slack;
      if (rel[i] != Relation::kLessEqual) ++num_art;
    }
    first_artificial_ = num_structural_ + num_slack;
    num_cols_ = first_artificial_ + num_art;

    rows_.assign(m, std::vector<Rational>(num_cols_));
    rhs_.resize(m);
    basis_.resize(m);
    std::size_t next_slack = num_structural_, next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = p.constraints[i];
      for (const Term& t : c.terms) rows_[i][t.var] = flip[i] ? -t.coef : t.coef;
      rhs_[i] = flip[i] ? -c.rhs : c.rhs;
      switch (rel[i]) {
        case Relation::kLessEqual:
          rows_[i][next_slack] = Rational(1);
          basis_[i] = next_slack++;
          break;
        case Relation::kGreaterEqual:
          rows_[i][next_slack++] = Rational(-1);
          rows_[i][next_art] = Rational(1);
          basis_[i] = next_art++;
          break;
        case Relation::kEqual:
          rows_[i][next_art] = Rational(1);
          basis_[i] = next_art++;
          break;
      }
    }

    cost_.assign(num_cols_, Rational());
    const bool minimize = p.sense == Sense::kMinimize;
    for (std::size_t v = 0; v < num_structural_; ++v) cost_[v] = minimize ? -p.objective[v] : p.objective[v];
  }

  LpStatus Run() {
    if (first_artificial_ < num_cols_) {
      std::vector<Rational> phase_one(num_cols_);
      for (std::size_t j = first_artificial_; j < num_cols_; ++j) phase_one[j] = Rational(-1);
      PriceOut(phase_one);
      const LpStatus s = Iterate(num_cols_);
      if (s != LpStatus::kOptimal) throw InvariantError("phase one cannot be unbounded");
      if (value_.sign() < 0) return LpStatus::kInfeasible;
      DriveOutArtificials();
    }
    PriceOut(cost_);
    return Iterate(first_artificial_);
  }

  std::vector<Rational> StructuralValues() const {
    std::vector<Rational> x(num_structural_);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < num_structural_) x[basis_[r]] = rhs_[r];
    }
    return x;
  }

  std::int64_t pivots() const { return pivots_; }

 private:
  // Reduced costs and objective value for `cost` under the current basis.
  void PriceOut(const std::vector<Rational>& cost) {
    reduced_ = cost;
    value_ = Rational();
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      value_ += cb * rhs_[r];
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!rows_[r][j].is_zero()) reduced_[j] -= cb * rows_[r][j];
      }
    }
  }

  // Columns >= `col_limit` never enter.
  LpStatus Iterate(std::size_t col_limit) {
    for (;;) {
      std::size_t entering = col_limit;
      for (std::size_t j = 0; j < col_limit; ++j) {
        if (reduced_[j].sign() > 0) {
          entering = j;
          break;
        }
      }
      if (entering == col_limit) return LpStatus::kOptimal;

      std::size_t leaving = basis_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rational& a = rows_[r][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rhs_[r] / a;
        if (leaving == basis_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == basis_.size()) return LpStatus::kUnbounded;
      Pivot(leaving, entering);
    }
  }

  void Pivot(std::size_t pr, std::size_t pc) {
    if (++pivots_ > options_.pivot_limit) {
      throw ResourceError("simplex pivot limit " + std::to_string(options_.pivot_limit) + " exceeded");
    }
    std::vector<Rational>& prow = rows_[pr];
    const Rational inv = Rational(1) / prow[pc];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      support.push_back(j);
    }
    rhs_[pr] *= inv;

    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs_or_value, bool is_objective) {
      const Rational factor = row[pc];
      if (factor.is_zero()) return;
      for (std::size_t j : support) row[j] -= factor * prow[j];
      if (is_objective) {
        rhs_or_value += factor * rhs_[pr];
      } else {
        rhs_or_value -= factor * rhs_[pr];
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != pr) eliminate(rows_[r], rhs_[r], false);
    }
    eliminate(reduced_, value_, true);
    basis_[pr] = pc;
  }

  // After a feasible phase one, every artificial still basic sits at zero.
  // Swap it for any structural or slack column with a nonzero entry in its
  // row; if there is none the row is redundant and is dropped.
  void DriveOutArtificials() {
    for (std::size_t r = 0; r < basis_.size();) {
      if (basis_[r] < first_artificial_) {
        ++r;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!rows_[r][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col < first_artificial_) {
        Pivot(r, col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  SimplexOptions options_;
  std::size_t num_structural_;
  std::size_t first_artificial_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational value_;
  std::int64_t pivots_ = 0;
};

}  // namespace detail

/// Solves the problem exactly. For an optimal result the returned point is
/// re-checked against every constraint in exact arithmetic.
inline LpSolution solve(const LpProblem& p, const SimplexOptions& options = {}) {
  validate_problem(p);
  detail::Tableau tableau(p, options);
  LpSolution out;
  out.status = tableau.Run();
  if (out.status != LpStatus::kOptimal) return out;
  out.values = tableau.StructuralValues();
  out.objective = evaluate_objective(p, out.values);
  if (!is_feasible(p, out.values)) throw InvariantError("simplex returned an infeasible point for " + p.name);
  return out;
}

/// LP(n), the optimum of the relaxation. Refuses n above `cap`.
inline Rational lp_value(TriangleSize size, int cap = kDefaultLpCap) {
  if (size.n() > cap) {
    throw RefusalError("exact simplex refused for n = " + std::to_string(size.n()) + " (cap " +
                       std::to_string(cap) + ")");
  }
  const LpSolution s = solve(build_primal(size));
  if (s.status != LpStatus::kOptimal) throw InvariantError("relaxation must be feasible and bounded");
  return s.objective;
}

}  // namespace tridots
