#pragma once

#include <vector>

#include "gjt/johnson.hpp"

namespace gjt {

/// Coefficients c_0..c_{t-1} of Wilson's matrix
///   A_t = sum_i c_i D_{k-i},  c_i = (-1)^(t-1-i) C(k-1-i, k-t) / C(n-k-t+i, k-t),
/// where D_m has entry C(k - s, m) between k-sets meeting in s points.
struct WilsonCoeffs {
  SchemeParams params;
  int t;
  std::vector<Rational> coeffs;
};

/// Requires 1 <= t <= k <= n/2; throws RangeError naming a vanishing denominator.
WilsonCoeffs wilson_coeffs(const SchemeParams& params, int t);

/// A_t as a scheme vector: a_s = sum_i c_i C(k - s, k - i). Vanishes for s >= t.
SchemeVector wilson_vector(const SchemeParams& params, int t);

/// Eigenvalues theta_0..theta_k of A_t.
EigTable wilson_eigs(const SchemeParams& params, int t);

/// L = {t-2} u {t, ..., k-1}: the family shape certified by M_t.
LSystemSpec certificate_spec(const SchemeParams& params, int t);

/// M_t = J - C(n-t, k-t) A_t together with its feasibility verdicts.
struct Certificate {
  LSystemSpec spec;
  int t;
  SchemeVector matrix;
  EigTable eigs;
  bool entry_feasible_for_theta_prime;  // m_s >= 1 on every s in L u {k}
  bool entry_tight_for_theta;           // m_s == 1 on every s in L u {k}
  Rational bound;                       // C(n-t, k-t)
  bool eig_ok;                          // top eigenvalue equals bound

  bool certified() const { return entry_feasible_for_theta_prime && eig_ok; }
};

/// Requires 2 <= t <= k/2 + 1 and n >= 2k.
Certificate build_certificate(const SchemeParams& params, int t);

/// Closed range of n for which M_t is claimed to certify the bound:
/// (t+1)(k-t+1) <= n <= k^2 + k(3-2t) + (t-1)^2. For t = 2 this is 3k-3 <= n <= k^2-k+1.
struct NRange {
  int lo;
  int hi;
  bool empty() const { return lo > hi; }
};
NRange certificate_range(int k, int t);

/// Certificates for n from max((t+1)(k-t+1), 2k) up to the range's upper end + 2.
std::vector<Certificate> certificate_range_scan(int k, int t);

}  // namespace gjt
