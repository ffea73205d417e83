// Copyright 2026 The ambigame Authors. All rights reserved.
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

#include "ambigame/linear_program.h"

#include <string>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

// x_j = shift + sum of coef * y_k over `terms`, with every y_k >= 0.
struct Substitution {
  Rational shift;
  std::vector<std::pair<int, Rational>> terms;
};

// Dense tableau in equality form: rows . columns = rhs, all columns >= 0.
class Tableau {
 public:
  Tableau(int num_columns, Matrix rows, Vector rhs, std::vector<int> basis)
      : num_columns_(num_columns),
        rows_(std::move(rows)),
        rhs_(std::move(rhs)),
        basis_(std::move(basis)) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return num_columns_; }
  const std::vector<int>& basis() const { return basis_; }
  const Rational& rhs(int row) const { return rhs_[row]; }
  const Rational& at(int row, int col) const { return rows_[row][col]; }

  void Pivot(int row, int col) {
    const Rational inv = 1 / rows_[row][col];
    for (auto& x : rows_[row]) x *= inv;
    rhs_[row] *= inv;
    for (int i = 0; i < num_rows(); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational f = rows_[i][col];
      for (int j = 0; j < num_columns(); ++j) {
        if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  void RemoveRow(int row) {
    rows_.erase(rows_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

  // Maximizes cost . columns over `allowed` columns with Bland's rule.
  // Returns false if unbounded.
  bool Maximize(const Vector& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::vector<bool> in_basis(num_columns(), false);
      for (int b : basis_) in_basis[b] = true;
      int entering = -1;
      for (int j = 0; j < num_columns() && entering < 0; ++j) {
        if (!allowed[j] || in_basis[j]) continue;
        Rational reduced = cost[j];
        for (int i = 0; i < num_rows(); ++i) {
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < num_rows(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
  }

  Vector Solution() const {
    Vector x(num_columns());
    for (int i = 0; i < num_rows(); ++i) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  int num_columns_;
  Matrix rows_;
  Vector rhs_;
  std::vector<int> basis_;
};

void Validate(const LinearProgram& lp) {
  const size_t n = lp.objective.size();
  for (size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      throw DimensionMismatch("constraint " + std::to_string(i) + " has " +
                              std::to_string(lp.constraints[i].coefficients.size()) +
                              " coefficients, objective has " + std::to_string(n));
    }
  }
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw DimensionMismatch("bounds must be empty or one per variable");
  }
}

}  // namespace

LpResult SolveLinearProgram(const LinearProgram& lp) {
  Validate(lp);
  const int n = lp.num_variables();

  // Rewrite every variable in terms of nonnegative ones.
  std::vector<Substitution> subs(n);
  std::vector<LinearConstraint> rows;
  std::vector<std::pair<int, Rational>> upper_rows;  // y_k <= width
  int num_y = 0;
  for (int j = 0; j < n; ++j) {
    VariableBounds b = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
    if (b.lower) {
      subs[j] = {*b.lower, {{num_y, Rational(1)}}};
      if (b.upper) {
        if (*b.upper < *b.lower) return {LpStatus::kInfeasible, {}, {}};
        upper_rows.emplace_back(num_y, *b.upper - *b.lower);
      }
      ++num_y;
    } else if (b.upper) {
      subs[j] = {*b.upper, {{num_y, Rational(-1)}}};
      ++num_y;
    } else {
      subs[j] = {Rational(0), {{num_y, Rational(1)}, {num_y + 1, Rational(-1)}}};
      num_y += 2;
    }
  }
  for (const auto& [col, width] : upper_rows) {
    LinearConstraint row{Vector(num_y), Relation::kLessEqual, width};
    row.coefficients[col] = 1;
    rows.push_back(std::move(row));
  }
  for (const auto& c : lp.constraints) {
    LinearConstraint row{Vector(num_y), c.relation, c.rhs};
    for (int j = 0; j < n; ++j) {
      if (c.coefficients[j] == 0) continue;
      row.rhs -= c.coefficients[j] * subs[j].shift;
      for (const auto& [k, coef] : subs[j].terms) {
        row.coefficients[k] += c.coefficients[j] * coef;
      }
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: y | slack/surplus | artificial.
  const int m = static_cast<int>(rows.size());
  int num_slack = 0, num_artificial = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::kEqual) ++num_slack;
    if (row.relation != Relation::kLessEqual) ++num_artificial;
  }
  const int num_cols = num_y + num_slack + num_artificial;
  const int first_artificial = num_y + num_slack;
  Matrix dense(m, Vector(num_cols));
  Vector rhs(m);
  std::vector<int> basis(m);
  int next_slack = num_y, next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < num_y; ++k) dense[i][k] = rows[i].coefficients[k];
    rhs[i] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual:
        dense[i][next_slack] = 1;
        basis[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        dense[i][next_slack++] = -1;
        dense[i][next_artificial] = 1;
        basis[i] = next_artificial++;
        break;
      case Relation::kEqual:
        dense[i][next_artificial] = 1;
        basis[i] = next_artificial++;
        break;
    }
  }
  Tableau tableau(num_cols, std::move(dense), std::move(rhs), std::move(basis));

  // Phase 1: drive the artificial variables to zero.
  if (num_artificial > 0) {
    Vector cost(num_cols);
    for (int j = first_artificial; j < num_cols; ++j) cost[j] = -1;
    tableau.Maximize(cost, std::vector<bool>(num_cols, true));
    for (int i = 0; i < tableau.num_rows(); ++i) {
      if (tableau.basis()[i] >= first_artificial && tableau.rhs(i) != 0) {
        return {LpStatus::kInfeasible, {}, {}};
      }
    }
    for (int i = tableau.num_rows() - 1; i >= 0; --i) {
      if (tableau.basis()[i] < first_artificial) continue;
      int col = -1;
      for (int j = 0; j < first_artificial && col < 0; ++j) {
        if (tableau.at(i, j) != 0) col = j;
      }
      if (col >= 0) {
        tableau.Pivot(i, col);
      } else {
        tableau.RemoveRow(i);  // Redundant equality.
      }
    }
  }

  // Phase 2.
  Vector cost(num_cols);
  Rational constant = 0;
  for (int j = 0; j < n; ++j) {
    constant += lp.objective[j] * subs[j].shift;
    for (const auto& [k, coef] : subs[j].terms) cost[k] += lp.objective[j] * coef;
  }
  std::vector<bool> allowed(num_cols, true);
  for (int j = first_artificial; j < num_cols; ++j) allowed[j] = false;
  if (!tableau.Maximize(cost, allowed)) return {LpStatus::kUnbounded, {}, {}};

  const Vector y = tableau.Solution();
  LpResult result{LpStatus::kOptimal, constant, Vector(n)};
  for (int k = 0; k < num_y; ++k) result.value += cost[k] * y[k];
  for (int j = 0; j < n; ++j) {
    result.point[j] = subs[j].shift;
    for (const auto& [k, coef] : subs[j].terms) result.point[j] += coef * y[k];
  }
  return result;
}

bool IsFeasible(const LinearProgram& lp) {
  LinearProgram feasibility = lp;
  feasibility.objective.assign(lp.objective.size(), Rational(0));
  return SolveLinearProgram(feasibility).status == LpStatus::kOptimal;
}

}  // namespace ambigame
