#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zfort/rational.hpp"

namespace zfort::lp {

enum class Direction { kMinimize, kMaximize };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* to_string(Status status);

struct Constraint {
  std::vector<Rational> coefficients;
  RowSense sense = RowSense::kLessEqual;
  Rational rhs;
};

/// Variables are nonnegative; an optional finite upper bound per variable is
/// handled as an explicit row.
struct LinearProgram {
  Direction direction = Direction::kMinimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  /// Empty, or one entry per variable.
  std::vector<std::optional<Rational>> upper_bounds;

  std::size_t variable_count() const { return objective.size(); }
  /// Throws InputError on inconsistent dimensions or negative upper bounds.
  void validate() const;
};

/// `dual` holds one multiplier per constraint followed by one per upper-bounded
/// variable (in variable order), signed so that the optimal value equals
/// sum(rhs * dual) and every reduced cost c_j - sum_i a_ij dual_i is >= 0 when
/// minimizing (<= 0 when maximizing).
struct Solution {
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Two-phase primal simplex over exact rationals with the smallest-index
/// pivot rule. Optimal solutions are certificate-checked before returning.
Solution solve(const LinearProgram& lp);

/// Exact check of an optimal solution: primal feasibility, dual sign and
/// reduced-cost feasibility, and equal primal and dual objective values.
bool verify_certificate(const LinearProgram& lp, const Solution& solution);

/// Thrown when an operation needs a finite optimum and the LP has none.
class NoOptimum : public std::runtime_error {
 public:
  explicit NoOptimum(Status status);
  Status status() const { return status_; }

 private:
  Status status_;
};

/// Minimum and maximum of variable `index` over the optimal face, obtained by
/// pinning the objective to its optimal value and re-solving.
std::pair<Rational, Rational> coordinate_range_at_optimum(const LinearProgram& lp,
                                                          std::size_t index);

}  // namespace zfort::lp
