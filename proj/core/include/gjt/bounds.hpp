#pragma once

#include <optional>

#include "gjt/johnson.hpp"
#include "gjt/lp.hpp"

namespace gjt {

/// Which matrix class the scheme-reduced program optimizes over.
enum class ThetaKind {
  lovasz,    // entries exactly 1 on non-edge classes
  schrijver  // entries at least 1 on non-edge classes
};

/// The scheme-reduced theta program for G(n, k, L).
///
/// Variables are e_0..e_k followed by lambda; the objective minimizes lambda
/// subject to lambda >= mu_j(e) on every eigenspace of positive dimension and
/// e_s (=|>=) 1 on every class s in L u {k}. Averaging any feasible matrix over
/// the symmetric group of [n] lands in this program without raising the top
/// eigenvalue, so its optimum is the graph parameter itself.
LinearProgram scheme_theta_program(const LSystemSpec& spec, ThetaKind kind);

/// Schrijver's theta' (the Delsarte bound) of G(n, k, L), exactly.
Rational theta_prime_lp(const LSystemSpec& spec);

/// Lovasz theta of G(n, k, L), exactly.
Rational theta_lp(const LSystemSpec& spec);

/// Optimal entries e_0..e_k of the scheme program (a matrix attaining the optimum).
SchemeVector theta_optimal_matrix(const LSystemSpec& spec, ThetaKind kind);

/// Parameters where the ratio formula for theta(G(n, k, 1)) applies: k >= 3 and 3k-3 <= n <= k^2-k+1.
bool in_separation_regime(const SchemeParams& params);

/// (k^2 - n) / (n (k - 1)) * C(n, k); throws RangeError outside the regime above.
Rational closed_form_theta_gnk1(const SchemeParams& params);

struct BoundReport {
  LSystemSpec spec;
  Rational theta_prime;
  Rational theta;
  std::optional<Rational> closed_form_theta;
  Rational two_star;                // C(n-2, k-2)
  bool strict_separation;           // theta' < theta
  bool theta_exceeds_two_star;      // theta > C(n-2, k-2)
};

/// Both LP values for an arbitrary spec; the closed form is filled in for
/// G(n, k, 1) inside the separation regime.
BoundReport bound_report(const LSystemSpec& spec);

/// bound_report for G(n, k, 1); throws RangeError outside the separation regime.
BoundReport separation_report(const SchemeParams& params);

}  // namespace gjt
