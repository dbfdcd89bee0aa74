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

// Standard-form linear programs for the triangle problem and a writer for
// the LP text format read by most solvers.
//
// Primal (maximize):  one variable x_a_b per cell in all_cells order;
//                     constraints row_1..row_n, col_1..col_n, diag_1..diag_n,
//                     each "sum of the line's cells <= 1".
// Dual (minimize):    variables r_1..r_n, c_1..c_n, d_1..d_n indexed by line
//                     length; one constraint per cell in all_cells order,
//                     r_i + c_j + d_k >= 1.
//
// With these orderings the dual's constraint matrix is exactly the
// transpose of the primal's.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tridots/errors.hpp"
#include "tridots/geometry.hpp"
#include "tridots/rational.hpp"

namespace tridots {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  std::size_t var;
  Rational coef;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;  // ascending var, no zero coefficients
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/// Optimize objective . x subject to constraints, x >= 0.
struct LpProblem {
  std::string name;
  Sense sense = Sense::kMaximize;
  std::vector<std::string> var_names;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  std::size_t num_vars() const { return var_names.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective;
};

/// Throws DomainError when sizes disagree, a term references a missing
/// variable, terms are unsorted/duplicated, or names collide.
inline void validate_problem(const LpProblem& p) {
  if (p.objective.size() != p.var_names.size()) {
    throw DomainError("LpProblem '" + p.name + "': objective length differs from variable count");
  }
  std::set<std::string> names(p.var_names.begin(), p.var_names.end());
  if (names.size() != p.var_names.size()) throw DomainError("LpProblem '" + p.name + "': duplicate variable name");
  std::set<std::string> cnames;
  for (const Constraint& c : p.constraints) {
    if (!cnames.insert(c.name).second) throw DomainError("LpProblem '" + p.name + "': duplicate constraint name " + c.name);
    for (std::size_t t = 0; t < c.terms.size(); ++t) {
      if (c.terms[t].var >= p.num_vars()) throw DomainError("constraint " + c.name + ": variable index out of range");
      if (t > 0 && c.terms[t].var <= c.terms[t - 1].var) throw DomainError("constraint " + c.name + ": terms not strictly ascending");
    }
  }
}

inline Rational evaluate_objective(const LpProblem& p, const std::vector<Rational>& x) {
  Rational total;
  for (std::size_t v = 0; v < p.num_vars(); ++v) {
    if (!p.objective[v].is_zero() && !x[v].is_zero()) total += p.objective[v] * x[v];
  }
  return total;
}

inline Rational evaluate_lhs(const Constraint& c, const std::vector<Rational>& x) {
  Rational lhs;
  for (const Term& t : c.terms) {
    if (!x[t.var].is_zero()) lhs += t.coef * x[t.var];
  }
  return lhs;
}

/// Indices of constraints the point violates, plus DomainError if the point
/// has the wrong length. Negative coordinates are reported as violations of
/// a pseudo-constraint numbered constraints.size() + var.
inline std::vector<std::size_t> violated_constraints(const LpProblem& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_vars()) throw DomainError("point has wrong dimension");
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const Constraint& c = p.constraints[i];
    const Rational lhs = evaluate_lhs(c, x);
    const bool ok = c.relation == Relation::kLessEqual      ? lhs <= c.rhs
                    : c.relation == Relation::kGreaterEqual ? lhs >= c.rhs
                                                            : lhs == c.rhs;
    if (!ok) bad.push_back(i);
  }
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v].sign() < 0) bad.push_back(p.constraints.size() + v);
  }
  return bad;
}

inline bool is_feasible(const LpProblem& p, const std::vector<Rational>& x) {
  return violated_constraints(p, x).empty();
}

inline std::string primal_var_name(const Cell& c) {
  return "x_" + std::to_string(c.row) + "_" + std::to_string(c.pos);
}

/// LP relaxation: maximize the number of dots, one <= 1 constraint per line.
/// Upper bounds x <= 1 are implied by the row constraints and left out.
inline LpProblem build_primal(TriangleSize size) {
  const int n = size.n();
  LpProblem p;
  p.name = "triangle_primal_" + std::to_string(n);
  p.sense = Sense::kMaximize;
  const auto cells = all_cells(size);
  for (const Cell& c : cells) p.var_names.push_back(primal_var_name(c));
  p.objective.assign(cells.size(), Rational(1));

  constexpr std::pair<LineFamily, const char*> kFamilies[] = {
      {LineFamily::kRow, "row_"}, {LineFamily::kColumn, "col_"}, {LineFamily::kDiagonal, "diag_"}};
  for (const auto& [family, prefix] : kFamilies) {
    for (int index = 1; index <= n; ++index) {
      Constraint con{prefix + std::to_string(index), {}, Relation::kLessEqual, Rational(1)};
      for (const Cell& c : cells_of_line(family, index, size)) con.terms.push_back({cell_ordinal(c), Rational(1)});
      std::sort(con.terms.begin(), con.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
      p.constraints.push_back(std::move(con));
    }
  }
  return p;
}

/// Dual of the relaxation: minimize the total line weight subject to
/// r_i + c_j + d_k >= 1 for every cell.
inline LpProblem build_dual(TriangleSize size) {
  const int n = size.n();
  LpProblem p;
  p.name = "triangle_dual_" + std::to_string(n);
  p.sense = Sense::kMinimize;
  for (const char* prefix : {"r_", "c_", "d_"}) {
    for (int index = 1; index <= n; ++index) p.var_names.push_back(prefix + std::to_string(index));
  }
  p.objective.assign(p.var_names.size(), Rational(1));
  for (const Cell& c : all_cells(size)) {
    const LineIndices idx = line_indices_unchecked(c, n);
    Constraint con{"cell_" + std::to_string(c.row) + "_" + std::to_string(c.pos), {}, Relation::kGreaterEqual, Rational(1)};
    con.terms = {{static_cast<std::size_t>(idx.row_len - 1), Rational(1)},
                 {static_cast<std::size_t>(n + idx.col_len - 1), Rational(1)},
                 {static_cast<std::size_t>(2 * n + idx.diag_len - 1), Rational(1)}};
    p.constraints.push_back(std::move(con));
  }
  return p;
}

/// Mechanical dual of a standard-form maximization (all constraints <=):
/// minimize b.y subject to A^T y >= c, y >= 0. Variable y_m is named after
/// constraint m; constraint v after variable v.
inline LpProblem standard_dual(const LpProblem& primal) {
  if (primal.sense != Sense::kMaximize) throw DomainError("standard_dual expects a maximization");
  LpProblem d;
  d.name = primal.name + "_dual";
  d.sense = Sense::kMinimize;
  for (const Constraint& c : primal.constraints) {
    if (c.relation != Relation::kLessEqual) throw DomainError("standard_dual expects <= constraints");
    d.var_names.push_back("y_" + c.name);
    d.objective.push_back(c.rhs);
  }
  d.constraints.resize(primal.num_vars());
  for (std::size_t v = 0; v < primal.num_vars(); ++v) {
    d.constraints[v].name = "dual_" + primal.var_names[v];
    d.constraints[v].relation = Relation::kGreaterEqual;
    d.constraints[v].rhs = primal.objective[v];
  }
  for (std::size_t m = 0; m < primal.constraints.size(); ++m) {
    for (const Term& t : primal.constraints[m].terms) d.constraints[t.var].terms.push_back({m, t.coef});
  }
  return d;
}

namespace detail {

struct LpNumber {
  std::string text;
  bool exact;
};

inline LpNumber lp_number(const Rational& r) {
  if (auto exact = ExactDecimal(r)) return {*exact, true};
  return {RoundedDecimal(r, 15), false};
}

// Appends " + 2 x" style terms, wrapping lines so no line grows too long.
class ExpressionWriter {
 public:
  explicit ExpressionWriter(std::ostringstream& out) : out_(out) {}

  void Add(const Rational& coef, const std::string& var, std::vector<std::string>& inexact) {
    if (coef.is_zero()) return;
    const LpNumber mag = lp_number(coef.sign() < 0 ? -coef : coef);
    if (!mag.exact) inexact.push_back(var + " = " + coef.str());
    std::string piece = coef.sign() < 0 ? "- " : (first_ ? "" : "+ ");
    if (mag.text != "1") piece += mag.text + " ";
    piece += var;
    if (width_ + piece.size() > 72 && !first_) {
      out_ << "\n   ";
      width_ = 3;
    } else if (!first_) {
      out_ << ' ';
      ++width_;
    }
    out_ << piece;
    width_ += piece.size();
    first_ = false;
  }

  bool empty() const { return first_; }

 private:
  std::ostringstream& out_;
  std::size_t width_ = 0;
  bool first_ = true;
};

}  // namespace detail

/// Renders the problem in LP text format. Coefficients whose decimal
/// expansion terminates are written exactly; any other coefficient is
/// rounded to 15 places, its exact fraction given in a comment, and a
/// header comment says the file is inexact.
inline std::string export_lp_text(const LpProblem& p) {
  validate_problem(p);
  std::vector<std::string> inexact;
  std::ostringstream body;

  body << (p.sense == Sense::kMaximize ? "Maximize" : "Minimize") << '\n';
  {
    std::ostringstream line;
    line << " obj: ";
    detail::ExpressionWriter w(line);
    for (std::size_t v = 0; v < p.num_vars(); ++v) w.Add(p.objective[v], p.var_names[v], inexact);
    if (w.empty()) line << "0 " << (p.num_vars() ? p.var_names[0] : std::string("x0"));
    for (const std::string& note : inexact) body << "\\ exact: " << note << '\n';
    body << line.str() << '\n';
  }
  body << "Subject To\n";
  for (const Constraint& c : p.constraints) {
    const std::size_t mark = inexact.size();
    std::ostringstream line;
    line << ' ' << c.name << ": ";
    detail::ExpressionWriter w(line);
    for (const Term& t : c.terms) w.Add(t.coef, p.var_names[t.var], inexact);
    if (w.empty()) line << "0 " << p.var_names.at(0);
    const detail::LpNumber rhs = detail::lp_number(c.rhs);
    if (!rhs.exact) inexact.push_back(c.name + " rhs = " + c.rhs.str());
    line << (c.relation == Relation::kLessEqual ? " <= " : c.relation == Relation::kGreaterEqual ? " >= " : " = ")
         << rhs.text << '\n';
    for (std::size_t i = mark; i < inexact.size(); ++i) body << "\\ exact: " << inexact[i] << '\n';
    body << line.str();
  }
  body << "Bounds\n";
  for (const std::string& v : p.var_names) body << ' ' << v << " >= 0\n";
  body << "End\n";

  std::ostringstream out;
  out << "\\ Problem: " << p.name << '\n';
  out << "\\ " << p.num_vars() << " variables, " << p.constraints.size() << " constraints\n";
  if (inexact.empty()) {
    out << "\\ All coefficients exact.\n";
  } else {
    out << "\\ WARNING: " << inexact.size()
        << " coefficient(s) rounded to 15 decimal places; exact fractions in comments.\n";
  }
  out << body.str();
  return out.str();
}

}  // namespace tridots
