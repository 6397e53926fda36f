#include "gjt/lp.hpp"

#include <stdexcept>
#include <string>

namespace gjt {

namespace {

using Row = std::vector<mpq_class>;
using Matrix = std::vector<Row>;

struct StructuralColumn {
  std::size_t var;
  int sign;
};

enum class Outcome { optimal, unbounded };

void pivot(Matrix& t, std::size_t prow, std::size_t pcol) {
  const mpq_class inv = 1 / t[prow][pcol];
  for (auto& x : t[prow]) x *= inv;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == prow || t[i][pcol] == 0) continue;
    const mpq_class factor = t[i][pcol];
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (t[prow][j] != 0) t[i][j] -= factor * t[prow][j];
    }
  }
}

// Minimizes cost over the tableau t = B^-1 [A | b], entering only columns
// below `allowed`. Bland's rule: lowest-index improving column enters, ties in
// the ratio test go to the lowest-index basic variable.
Outcome run_simplex(Matrix& t, std::vector<std::size_t>& basis, const Row& cost, std::size_t allowed) {
  const std::size_t m = t.size();
  if (m == 0) {
    for (std::size_t j = 0; j < allowed; ++j) {
      if (cost[j] < 0) return Outcome::unbounded;
    }
    return Outcome::optimal;
  }
  const std::size_t rhs = t[0].size() - 1;
  while (true) {
    std::size_t enter = allowed;
    for (std::size_t j = 0; j < allowed; ++j) {
      mpq_class d = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][j] != 0) d -= cost[basis[i]] * t[i][j];
      }
      if (d < 0) {
        enter = j;
        break;
      }
    }
    if (enter == allowed) return Outcome::optimal;

    std::size_t leave = m;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return Outcome::unbounded;
    pivot(t, leave, enter);
    basis[leave] = enter;
  }
}

// Solves M y = rhs exactly for square nonsingular M.
Row solve_square(Matrix a, Row b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::logic_error("lp_solve: singular basis");
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const mpq_class f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  Row y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[i] / a[i][i];
  return y;
}

}  // namespace

std::string_view to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (!lower_bounds.empty() && lower_bounds.size() != n) {
    throw std::invalid_argument("LinearProgram: bound vector has length " + std::to_string(lower_bounds.size()) +
                                ", expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coeffs.size() != n) {
      throw std::invalid_argument("LinearProgram: constraint " + std::to_string(i) + " has length " +
                                  std::to_string(constraints[i].coeffs.size()) + ", expected " + std::to_string(n));
    }
  }
}

Rational evaluate_row(const Constraint& row, const std::vector<Rational>& point) {
  Rational lhs;
  for (std::size_t v = 0; v < row.coeffs.size(); ++v) lhs += row.coeffs[v] * point[v];
  return lhs;
}

bool is_feasible(const LinearProgram& program, const std::vector<Rational>& point) {
  if (point.size() != program.num_vars()) return false;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (auto lb = program.lower_bound(v); lb && point[v] < *lb) return false;
  }
  for (const auto& row : program.constraints) {
    const Rational lhs = evaluate_row(row, point);
    switch (row.relation) {
      case Relation::less_equal:
        if (lhs > row.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

LPSolution lp_solve(const LinearProgram& program) {
  program.validate();
  const std::size_t nvars = program.num_vars();
  const std::size_t m = program.constraints.size();

  Row cmin(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    cmin[v] = program.sense == Sense::minimize ? program.objective[v].raw() : mpq_class(-program.objective[v].raw());
  }

  // Shift bounded variables to x' >= 0, split free ones into x+ - x-.
  std::vector<StructuralColumn> structural;
  Row shift(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    if (auto lb = program.lower_bound(v)) {
      shift[v] = lb->raw();
      structural.push_back({v, +1});
    } else {
      structural.push_back({v, +1});
      structural.push_back({v, -1});
    }
  }
  std::size_t num_slack = 0;
  for (const auto& row : program.constraints) {
    if (row.relation != Relation::equal) ++num_slack;
  }
  const std::size_t ns = structural.size();
  const std::size_t first_art = ns + num_slack;
  const std::size_t ncols = first_art + m;

  Matrix t(m, Row(ncols + 1));
  std::vector<int> row_sign(m, 1);
  std::size_t slack = ns;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = program.constraints[i];
    for (std::size_t c = 0; c < ns; ++c) {
      t[i][c] = row.coeffs[structural[c].var].raw() * structural[c].sign;
    }
    mpq_class rhs = row.rhs.raw();
    for (std::size_t v = 0; v < nvars; ++v) rhs -= row.coeffs[v].raw() * shift[v];
    if (row.relation == Relation::less_equal) t[i][slack++] = 1;
    if (row.relation == Relation::greater_equal) t[i][slack++] = -1;
    t[i][ncols] = rhs;
    if (rhs < 0) {
      row_sign[i] = -1;
      for (auto& x : t[i]) x = -x;
    }
    t[i][first_art + i] = 1;
  }
  const Matrix original = t;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = first_art + i;

  LPSolution solution;

  Row phase1_cost(ncols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[first_art + i] = 1;
  run_simplex(t, basis, phase1_cost, ncols);
  mpq_class infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= first_art) infeasibility += t[i][ncols];
  }
  if (infeasibility > 0) {
    solution.status = LPStatus::infeasible;
    return solution;
  }

  // Drive zero-valued artificials out of the basis; drop rows that are redundant.
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < m; ++i) kept_rows.push_back(i);
  for (std::size_t i = 0; i < t.size();) {
    if (basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t col = first_art;
    for (std::size_t j = 0; j < first_art; ++j) {
      if (t[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < first_art) {
      pivot(t, i, col);
      basis[i] = col;
      ++i;
    } else {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      kept_rows.erase(kept_rows.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  Row phase2_cost(ncols, 0);
  for (std::size_t c = 0; c < ns; ++c) phase2_cost[c] = cmin[structural[c].var] * structural[c].sign;
  if (run_simplex(t, basis, phase2_cost, first_art) == Outcome::unbounded) {
    solution.status = LPStatus::unbounded;
    return solution;
  }

  Row column_value(ncols, 0);
  for (std::size_t i = 0; i < t.size(); ++i) column_value[basis[i]] = t[i][ncols];
  Row x = shift;
  for (std::size_t c = 0; c < ns; ++c) x[structural[c].var] += column_value[c] * structural[c].sign;

  solution.status = LPStatus::optimal;
  solution.point.reserve(nvars);
  Rational value;
  for (std::size_t v = 0; v < nvars; ++v) {
    solution.point.emplace_back(x[v]);
    value += program.objective[v] * solution.point.back();
  }
  solution.value = value;

  // Duals from B^T y = c_B over the rows that survived.
  const std::size_t r = kept_rows.size();
  Matrix bt(r, Row(r));
  Row cb(r);
  for (std::size_t q = 0; q < r; ++q) {
    cb[q] = phase2_cost[basis[q]];
    for (std::size_t p = 0; p < r; ++p) bt[q][p] = original[kept_rows[p]][basis[q]];
  }
  const Row y = r > 0 ? solve_square(std::move(bt), std::move(cb)) : Row{};
  solution.duals.assign(m, Rational());
  for (std::size_t p = 0; p < r; ++p) {
    solution.duals[kept_rows[p]] = Rational(mpq_class(y[p] * row_sign[kept_rows[p]]));
  }
  return solution;
}

}  // namespace gjt
