#include "gjt/bounds.hpp"

#include <stdexcept>
#include <string>

#include "gjt/binomial.hpp"
#include "gjt/error.hpp"

namespace gjt {

LinearProgram scheme_theta_program(const LSystemSpec& spec, ThetaKind kind) {
  const SchemeParams& p = spec.params();
  const int k = p.k();
  const std::size_t lambda = static_cast<std::size_t>(k) + 1;
  const std::size_t nvars = lambda + 1;

  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(nvars, Rational(0));
  lp.objective[lambda] = 1;
  lp.lower_bounds.assign(nvars, std::nullopt);

  for (int j = 0; j <= k; ++j) {
    if (multiplicity(p, j) == 0) continue;
    Constraint row;
    row.coeffs.assign(nvars, Rational(0));
    for (int s = 0; s <= k; ++s) row.coeffs[s] = -Rational(eberlein(p, k - s, j));
    row.coeffs[lambda] = 1;
    row.relation = Relation::greater_equal;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  }
  for (int s = 0; s <= k; ++s) {
    if (!spec.non_edge(s)) continue;
    if (kind == ThetaKind::schrijver) {
      lp.lower_bounds[s] = Rational(1);
    } else {
      Constraint row;
      row.coeffs.assign(nvars, Rational(0));
      row.coeffs[s] = 1;
      row.relation = Relation::equal;
      row.rhs = 1;
      lp.constraints.push_back(std::move(row));
    }
  }
  return lp;
}

namespace {

LPSolution solve_theta(const LSystemSpec& spec, ThetaKind kind) {
  LPSolution sol = lp_solve(scheme_theta_program(spec, kind));
  if (sol.status != LPStatus::optimal) {
    // Cannot happen: e = J is feasible and the trace bounds lambda below by 1.
    throw std::logic_error("theta program for n=" + std::to_string(spec.params().n()) + ", k=" +
                           std::to_string(spec.params().k()) + " returned " + std::string(to_string(sol.status)));
  }
  return sol;
}

}  // namespace

Rational theta_prime_lp(const LSystemSpec& spec) { return solve_theta(spec, ThetaKind::schrijver).value; }

Rational theta_lp(const LSystemSpec& spec) { return solve_theta(spec, ThetaKind::lovasz).value; }

SchemeVector theta_optimal_matrix(const LSystemSpec& spec, ThetaKind kind) {
  LPSolution sol = solve_theta(spec, kind);
  sol.point.pop_back();
  return SchemeVector(spec.params(), std::move(sol.point));
}

bool in_separation_regime(const SchemeParams& params) {
  const int n = params.n();
  const int k = params.k();
  return k >= 3 && 3 * k - 3 <= n && n <= k * k - k + 1;
}

Rational closed_form_theta_gnk1(const SchemeParams& params) {
  const int n = params.n();
  const int k = params.k();
  if (!in_separation_regime(params)) {
    throw RangeError("closed-form theta of G(n,k,1) requires k >= 3 and 3k-3 <= n <= k^2-k+1 (got n=" +
                     std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return Rational(BigInt(k * k - n), BigInt(n * (k - 1))) * Rational(binom(n, k));
}

BoundReport bound_report(const LSystemSpec& spec) {
  const SchemeParams& p = spec.params();
  Rational theta_prime = theta_prime_lp(spec);
  Rational theta = theta_lp(spec);
  std::optional<Rational> closed;
  if (in_separation_regime(p) && spec == LSystemSpec::missing_one(p, 1)) {
    closed = closed_form_theta_gnk1(p);
  }
  Rational two_star(binom(p.n() - 2, p.k() - 2));
  const bool strict = theta_prime < theta;
  const bool exceeds = theta > two_star;
  return BoundReport{spec, std::move(theta_prime), std::move(theta), std::move(closed),
                     std::move(two_star), strict, exceeds};
}

BoundReport separation_report(const SchemeParams& params) {
  if (!in_separation_regime(params)) {
    throw RangeError("separation report requires k >= 3 and 3k-3 <= n <= k^2-k+1 (got n=" +
                     std::to_string(params.n()) + ", k=" + std::to_string(params.k()) + ")");
  }
  return bound_report(LSystemSpec::missing_one(params, 1));
}

}  // namespace gjt
