#include "zfort/lp.hpp"

#include <string>

#include "zfort/errors.hpp"

namespace zfort::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

NoOptimum::NoOptimum(Status status)
    : std::runtime_error(std::string("linear program is ") + to_string(status)),
      status_(status) {}

void LinearProgram::validate() const {
  const std::size_t n = variable_count();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != n) {
      throw InputError("constraint " + std::to_string(i) + " has " +
                       std::to_string(constraints[i].coefficients.size()) +
                       " coefficients, expected " + std::to_string(n));
    }
  }
  if (!upper_bounds.empty() && upper_bounds.size() != n) {
    throw InputError("upper bound list must be empty or have one entry per variable");
  }
  for (const auto& ub : upper_bounds) {
    if (ub && *ub < 0) throw InputError("upper bounds must be nonnegative");
  }
}

namespace {

/// Every row of the program in one list: user constraints, then the upper
/// bounds as x_j <= u_j rows.
std::vector<Constraint> all_rows(const LinearProgram& lp) {
  std::vector<Constraint> rows = lp.constraints;
  const std::size_t n = lp.variable_count();
  for (std::size_t j = 0; j < lp.upper_bounds.size(); ++j) {
    if (!lp.upper_bounds[j]) continue;
    Constraint row;
    row.coefficients.assign(n, Rational(0));
    row.coefficients[j] = 1;
    row.sense = RowSense::kLessEqual;
    row.rhs = *lp.upper_bounds[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

class Tableau {
 public:
  Tableau(const std::vector<Constraint>& rows, std::size_t structural) : structural_(structural) {
    const std::size_t m = rows.size();
    std::size_t logical = 0;
    std::size_t artificial = 0;
    for (const auto& row : rows) {
      const bool flip = row.rhs < 0;
      RowSense sense = row.sense;
      if (flip && sense == RowSense::kLessEqual) {
        sense = RowSense::kGreaterEqual;
      } else if (flip && sense == RowSense::kGreaterEqual) {
        sense = RowSense::kLessEqual;
      }
      senses_.push_back(sense);
      flipped_.push_back(flip);
      if (sense != RowSense::kEqual) ++logical;
      if (sense != RowSense::kLessEqual) ++artificial;
    }
    first_artificial_ = structural + logical;
    columns_ = first_artificial_ + artificial;
    cells_.assign(m, std::vector<Rational>(columns_ + 1, Rational(0)));
    basis_.assign(m, 0);
    identity_.assign(m, 0);

    std::size_t next_logical = structural;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational sign = flipped_[i] ? -1 : 1;
      for (std::size_t j = 0; j < structural; ++j) cells_[i][j] = sign * rows[i].coefficients[j];
      cells_[i][columns_] = sign * rows[i].rhs;
      switch (senses_[i]) {
        case RowSense::kLessEqual:
          cells_[i][next_logical] = 1;
          basis_[i] = identity_[i] = next_logical++;
          break;
        case RowSense::kGreaterEqual:
          cells_[i][next_logical++] = -1;
          cells_[i][next_artificial] = 1;
          basis_[i] = identity_[i] = next_artificial++;
          break;
        case RowSense::kEqual:
          cells_[i][next_artificial] = 1;
          basis_[i] = identity_[i] = next_artificial++;
          break;
      }
    }
  }

  bool has_artificials() const { return columns_ > first_artificial_; }
  bool is_artificial(std::size_t j) const { return j >= first_artificial_; }

  /// Runs the simplex method for `cost` (minimization). Returns false when
  /// the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    std::vector<Rational> reduced(columns_ + 1);
    for (std::size_t j = 0; j <= columns_; ++j) {
      Rational d = j < columns_ ? cost[j] : Rational(0);
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cost[basis_[i]] != 0 && cells_[i][j] != 0) d -= cost[basis_[i]] * cells_[i][j];
      }
      reduced[j] = d;
    }
    while (true) {
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == columns_) return true;

      std::size_t leave = cells_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i][enter] <= 0) continue;
        Rational ratio = cells_[i][columns_] / cells_[i][enter];
        if (leave == cells_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == cells_.size()) return false;
      pivot(leave, enter, &reduced);
    }
  }

  /// After phase one: pivot basic artificials out wherever a non-artificial
  /// column has a nonzero entry in their row. Rows where none does are
  /// redundant and keep their artificial at level zero.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (cells_[i][j] != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
    }
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) z += cost[basis_[i]] * cells_[i][columns_];
    return z;
  }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = cells_[i][columns_];
    }
    return x;
  }

  /// Duals of the original (unflipped) rows for minimizing `cost`.
  std::vector<Rational> row_duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(cells_.size(), Rational(0));
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      Rational v = 0;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cost[basis_[i]] != 0) v += cost[basis_[i]] * cells_[i][identity_[r]];
      }
      y[r] = flipped_[r] ? Rational(-v) : v;
    }
    return y;
  }

  std::size_t columns() const { return columns_; }

 private:
  void pivot(std::size_t row, std::size_t col, std::vector<Rational>* reduced) {
    auto& prow = cells_[row];
    const Rational inv = 1 / prow[col];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational factor = target[col];
      if (factor == 0) return;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (prow[j] != 0) target[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i != row) eliminate(cells_[i]);
    }
    if (reduced != nullptr) eliminate(*reduced);
    basis_[row] = col;
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<RowSense> senses_;
  std::vector<bool> flipped_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_;
};

}  // namespace

Solution solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.variable_count();
  const std::vector<Constraint> rows = all_rows(lp);
  Tableau tableau(rows, n);
  Solution solution;

  if (tableau.has_artificials()) {
    std::vector<Rational> phase_one(tableau.columns(), Rational(0));
    for (std::size_t j = 0; j < tableau.columns(); ++j) {
      if (tableau.is_artificial(j)) phase_one[j] = 1;
    }
    tableau.optimize(phase_one, true);
    if (tableau.objective_value(phase_one) != 0) {
      solution.status = Status::kInfeasible;
      return solution;
    }
    tableau.drive_out_artificials();
  }

  const bool maximize = lp.direction == Direction::kMaximize;
  std::vector<Rational> cost(tableau.columns(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
  if (!tableau.optimize(cost, false)) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  solution.status = Status::kOptimal;
  solution.primal = tableau.structural_values();
  solution.dual = tableau.row_duals(cost);
  Rational value = 0;
  for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * solution.primal[j];
  solution.value = value;
  if (maximize) {
    for (auto& y : solution.dual) y = -y;
  }
  if (!verify_certificate(lp, solution)) {
    throw std::logic_error("simplex produced an optimum that fails its certificate check");
  }
  return solution;
}

bool verify_certificate(const LinearProgram& lp, const Solution& solution) {
  if (solution.status != Status::kOptimal) return false;
  const std::size_t n = lp.variable_count();
  const std::vector<Constraint> rows = all_rows(lp);
  if (solution.primal.size() != n || solution.dual.size() != rows.size()) return false;
  const bool minimize = lp.direction == Direction::kMinimize;

  Rational primal_value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (solution.primal[j] < 0) return false;
    primal_value += lp.objective[j] * solution.primal[j];
  }
  if (primal_value != solution.value) return false;

  Rational dual_value = 0;
  std::vector<Rational> reduced = lp.objective;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += row.coefficients[j] * solution.primal[j];
    if (row.sense == RowSense::kLessEqual && lhs > row.rhs) return false;
    if (row.sense == RowSense::kGreaterEqual && lhs < row.rhs) return false;
    if (row.sense == RowSense::kEqual && lhs != row.rhs) return false;

    const Rational& y = solution.dual[i];
    // Multiplier signs: a minimization needs y >= 0 on >= rows and y <= 0 on
    // <= rows; a maximization the reverse.
    if (row.sense == RowSense::kGreaterEqual && (minimize ? y < 0 : y > 0)) return false;
    if (row.sense == RowSense::kLessEqual && (minimize ? y > 0 : y < 0)) return false;
    dual_value += row.rhs * y;
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= row.coefficients[j] * y;
  }
  for (const auto& d : reduced) {
    if (minimize ? d < 0 : d > 0) return false;
  }
  return dual_value == solution.value;
}

std::pair<Rational, Rational> coordinate_range_at_optimum(const LinearProgram& lp,
                                                          std::size_t index) {
  if (index >= lp.variable_count()) throw InputError("coordinate index out of range");
  const Solution base = solve(lp);
  if (base.status != Status::kOptimal) throw NoOptimum(base.status);

  LinearProgram pinned = lp;
  pinned.constraints.push_back({lp.objective, RowSense::kEqual, base.value});
  pinned.objective.assign(lp.variable_count(), Rational(0));
  pinned.objective[index] = 1;

  pinned.direction = Direction::kMinimize;
  const Solution low = solve(pinned);
  pinned.direction = Direction::kMaximize;
  const Solution high = solve(pinned);
  if (low.status != Status::kOptimal) throw NoOptimum(low.status);
  if (high.status != Status::kOptimal) throw NoOptimum(high.status);
  return {low.value, high.value};
}

}  // namespace zfort::lp
