#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gjt/rational.hpp"

namespace gjt {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::greater_equal;
  Rational rhs;
};

/// A linear program over the rationals.
///
/// `lower_bounds[v]` is either a finite lower bound for variable v or nullopt
/// for a free variable. An empty `lower_bounds` means every variable is free.
struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;

  std::size_t num_vars() const { return objective.size(); }
  std::optional<Rational> lower_bound(std::size_t v) const {
    return lower_bounds.empty() ? std::nullopt : lower_bounds[v];
  }
  /// Throws std::invalid_argument if any row or the bound vector has the wrong length.
  void validate() const;
};

enum class LPStatus { optimal, infeasible, unbounded };

std::string_view to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> point;
  /// Multipliers y, one per constraint, for the objective written as a
  /// minimization (c for min, -c for max). At an optimum, r = c - sum_i y_i a_i
  /// vanishes on free variables and is >= 0 on bounded ones; y_i >= 0 on >= rows
  /// and y_i <= 0 on <= rows.
  std::vector<Rational> duals;
};

/// Exact two-phase primal simplex with Bland's rule. Deterministic.
LPSolution lp_solve(const LinearProgram& program);

/// Left-hand side of a constraint at a point.
Rational evaluate_row(const Constraint& row, const std::vector<Rational>& point);

/// True if `point` satisfies every constraint and bound exactly.
bool is_feasible(const LinearProgram& program, const std::vector<Rational>& point);

}  // namespace gjt
