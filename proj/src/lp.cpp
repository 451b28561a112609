// Copyright 2026 The partid Authors.
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
#include "partid/lp.hpp"

#include <cstddef>
#include <utility>

#include "partid/error.hpp"

namespace partid {

LinearProgram LinearProgram::Nonnegative(std::size_t n, Sense sense) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective.assign(n, Rational(0));
  lp.eq_matrix = RationalMatrix(0, n);
  lp.le_matrix = RationalMatrix(0, n);
  return lp;
}

void LinearProgram::AddEquality(const Vector& row, const Rational& rhs) {
  eq_matrix.AppendRow(row);
  eq_rhs.push_back(rhs);
}

void LinearProgram::AddInequality(const Vector& row, const Rational& rhs) {
  le_matrix.AppendRow(row);
  le_rhs.push_back(rhs);
}

namespace {

void Validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  if (lp.eq_matrix.rows() != lp.eq_rhs.size() ||
      (lp.eq_matrix.rows() > 0 && lp.eq_matrix.cols() != n)) {
    Fail(ErrorKind::kMalformedProgram, "equality block shape mismatch");
  }
  if (lp.le_matrix.rows() != lp.le_rhs.size() ||
      (lp.le_matrix.rows() > 0 && lp.le_matrix.cols() != n)) {
    Fail(ErrorKind::kMalformedProgram, "inequality block shape mismatch");
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    Fail(ErrorKind::kMalformedProgram, "lower bound count mismatch");
  }
}

// Column layout of one original variable in the standard-form program.
struct VariableMap {
  std::size_t plus = 0;
  std::ptrdiff_t minus = -1;  // -1 unless the variable is free
  Rational offset = 0;
};

class Tableau {
 public:
  // Each row holds width coefficients followed by the rhs.
  Tableau(std::vector<Vector> rows, std::vector<std::size_t> basis,
          std::size_t width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width),
        allowed_(width, true) {}

  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return rows_[r][width_]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void Disallow(std::size_t c) { allowed_[c] = false; }

  // Installs the objective  max cost . z  and expresses it in terms of the
  // current basis.
  void SetObjective(const Vector& cost) {
    objective_.assign(width_ + 1, Rational(0));
    for (std::size_t c = 0; c < width_; ++c) objective_[c] = -cost[c];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c <= width_; ++c) {
        if (rows_[r][c] != 0) objective_[c] += cb * rows_[r][c];
      }
    }
  }

  const Rational& objective_value() const { return objective_[width_]; }

  // Bland's rule primal simplex. Returns false when unbounded.
  bool Optimize() {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t c = 0; c < width_; ++c) {
        if (allowed_[c] && objective_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r][width_] / rows_[r][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    Vector& pr = rows_[row];
    const Rational inv = 1 / pr[col];
    for (auto& v : pr) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](Vector& target) {
      if (target[col] == 0) return;
      const Rational f = target[col];
      for (std::size_t c = 0; c <= width_; ++c) {
        if (pr[c] != 0) target[c] -= f * pr[c];
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != row) eliminate(rows_[r]);
    }
    if (!objective_.empty()) eliminate(objective_);
    basis_[row] = col;
  }

  void EraseRow(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<Vector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t width_;
  std::vector<bool> allowed_;
  Vector objective_;
};

}  // namespace

LPResult SolveLP(const LinearProgram& lp) {
  Validate(lp);
  const std::size_t n = lp.num_variables();

  std::vector<VariableMap> vars(n);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    vars[j].plus = structural++;
    if (!lp.lower_bounds.empty() && !lp.lower_bounds[j].has_value()) {
      vars[j].minus = static_cast<std::ptrdiff_t>(structural++);
    } else if (!lp.lower_bounds.empty()) {
      vars[j].offset = *lp.lower_bounds[j];
    }
  }

  const std::size_t m_eq = lp.eq_matrix.rows();
  const std::size_t m_le = lp.le_matrix.rows();
  const std::size_t m = m_eq + m_le;
  const std::size_t slack_begin = structural;
  const std::size_t art_begin = slack_begin + m_le;

  // Standard-form rows over structural + slack columns; artificials appended
  // once we know which rows need them.
  struct StdRow {
    Vector coeffs;
    Rational rhs;
    bool slack_basic = false;
  };
  std::vector<StdRow> std_rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_eq = i < m_eq;
    const RationalMatrix& block = is_eq ? lp.eq_matrix : lp.le_matrix;
    const std::size_t bi = is_eq ? i : i - m_eq;
    StdRow row;
    row.coeffs.assign(art_begin, Rational(0));
    row.rhs = is_eq ? lp.eq_rhs[bi] : lp.le_rhs[bi];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = block(bi, j);
      if (a == 0) continue;
      row.coeffs[vars[j].plus] += a;
      if (vars[j].minus >= 0) row.coeffs[static_cast<std::size_t>(vars[j].minus)] -= a;
      row.rhs -= a * vars[j].offset;
    }
    if (!is_eq) row.coeffs[slack_begin + bi] = 1;
    if (row.rhs < 0) {
      for (auto& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
    } else if (!is_eq) {
      row.slack_basic = true;
    }
    std_rows[i] = std::move(row);
  }

  std::size_t num_art = 0;
  for (const auto& r : std_rows) num_art += r.slack_basic ? 0 : 1;
  const std::size_t width = art_begin + num_art;

  std::vector<Vector> rows(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    Vector full(width + 1);
    for (std::size_t c = 0; c < art_begin; ++c) full[c] = std_rows[i].coeffs[c];
    full[width] = std_rows[i].rhs;
    if (std_rows[i].slack_basic) {
      basis[i] = slack_begin + (i - m_eq);
    } else {
      full[next_art] = 1;
      basis[i] = next_art++;
    }
    rows[i] = std::move(full);
  }

  Tableau tab(std::move(rows), std::move(basis), width);

  if (num_art > 0) {
    Vector phase1(width);
    for (std::size_t c = art_begin; c < width; ++c) phase1[c] = -1;
    tab.SetObjective(phase1);
    tab.Optimize();  // bounded below by zero
    if (tab.objective_value() < 0) return LPResult{LPStatus::kInfeasible, {}, 0};
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < tab.num_rows();) {
      if (tab.basis()[r] < art_begin) {
        ++r;
        continue;
      }
      std::size_t col = art_begin;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (tab.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col == art_begin) {
        tab.EraseRow(r);  // redundant constraint
      } else {
        tab.Pivot(r, col);
        ++r;
      }
    }
    for (std::size_t c = art_begin; c < width; ++c) tab.Disallow(c);
  }

  Vector cost(width);
  const bool minimize = lp.sense == Sense::kMinimize;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = minimize ? Rational(-lp.objective[j]) : lp.objective[j];
    cost[vars[j].plus] += c;
    if (vars[j].minus >= 0) cost[static_cast<std::size_t>(vars[j].minus)] -= c;
  }
  tab.SetObjective(cost);
  if (!tab.Optimize()) return LPResult{LPStatus::kUnbounded, {}, 0};

  Vector z(width);
  for (std::size_t r = 0; r < tab.num_rows(); ++r) z[tab.basis()[r]] = tab.rhs(r);
  LPResult result;
  result.status = LPStatus::kOptimal;
  result.solution.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = vars[j].offset + z[vars[j].plus];
    if (vars[j].minus >= 0) x -= z[static_cast<std::size_t>(vars[j].minus)];
    result.solution[j] = std::move(x);
  }
  result.value = Dot(lp.objective, result.solution);
  return result;
}

bool SatisfiesConstraints(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.num_variables()) return false;
  for (std::size_t i = 0; i < lp.eq_matrix.rows(); ++i) {
    if (Dot(lp.eq_matrix.Row(i), x) != lp.eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < lp.le_matrix.rows(); ++i) {
    if (Dot(lp.le_matrix.Row(i), x) > lp.le_rhs[i]) return false;
  }
  if (lp.lower_bounds.empty()) {
    for (const auto& v : x) {
      if (v < 0) return false;
    }
  } else {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (lp.lower_bounds[j] && x[j] < *lp.lower_bounds[j]) return false;
    }
  }
  return true;
}

}  // namespace partid
