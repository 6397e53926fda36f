#include "gjt/wilson.hpp"

#include <algorithm>
#include <string>

#include "gjt/binomial.hpp"
#include "gjt/error.hpp"

namespace gjt {

WilsonCoeffs wilson_coeffs(const SchemeParams& params, int t) {
  const int n = params.n();
  const int k = params.k();
  if (t < 1 || t > k) {
    throw RangeError("Wilson matrix requires 1 <= t <= k (got t=" + std::to_string(t) + ", k=" + std::to_string(k) + ")");
  }
  WilsonCoeffs out{params, t, {}};
  for (int i = 0; i < t; ++i) {
    const BigInt den = binom(n - k - t + i, k - t);
    if (den == 0) {
      throw RangeError("Wilson coefficient c_" + std::to_string(i) + " has vanishing denominator C(" +
                       std::to_string(n - k - t + i) + "," + std::to_string(k - t) + ") = 0; requires n >= 2k (got n=" +
                       std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    Rational c(binom(k - 1 - i, k - t), den);
    if ((t - 1 - i) % 2 != 0) c = -c;
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

SchemeVector wilson_vector(const SchemeParams& params, int t) {
  const WilsonCoeffs w = wilson_coeffs(params, t);
  const int k = params.k();
  SchemeVector v(params);
  for (int s = 0; s <= k; ++s) {
    Rational a;
    for (int i = 0; i < t; ++i) a += w.coeffs[i] * Rational(binom(k - s, k - i));
    v[s] = a;
  }
  return v;
}

EigTable wilson_eigs(const SchemeParams& params, int t) { return eig_of_vector(wilson_vector(params, t)); }

LSystemSpec certificate_spec(const SchemeParams& params, int t) {
  std::vector<int> allowed;
  if (t >= 2) allowed.push_back(t - 2);
  for (int s = t; s < params.k(); ++s) allowed.push_back(s);
  return LSystemSpec(params, std::move(allowed));
}

Certificate build_certificate(const SchemeParams& params, int t) {
  const int n = params.n();
  const int k = params.k();
  if (t < 2 || 2 * t > k + 2) {
    throw RangeError("certificate requires 2 <= t <= k/2 + 1 (got t=" + std::to_string(t) + ", k=" + std::to_string(k) +
                     ")");
  }
  if (n < 2 * k) {
    throw RangeError("certificate requires n >= 2k (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  const Rational bound(binom(n - t, k - t));
  SchemeVector matrix = SchemeVector::ones(params) - bound * wilson_vector(params, t);
  EigTable eigs = eig_of_vector(matrix);
  LSystemSpec spec = certificate_spec(params, t);

  bool feasible = true;
  bool tight = true;
  for (int s = 0; s <= k; ++s) {
    if (!spec.non_edge(s)) continue;
    feasible = feasible && matrix[s] >= Rational(1);
    tight = tight && matrix[s] == Rational(1);
  }
  const bool eig_ok = eigs.max() == bound;
  return Certificate{std::move(spec), t, std::move(matrix), std::move(eigs), feasible, tight, bound, eig_ok};
}

NRange certificate_range(int k, int t) {
  return NRange{(t + 1) * (k - t + 1), k * k + k * (3 - 2 * t) + (t - 1) * (t - 1)};
}

std::vector<Certificate> certificate_range_scan(int k, int t) {
  const NRange range = certificate_range(k, t);
  std::vector<Certificate> out;
  for (int n = std::max(range.lo, 2 * k); n <= range.hi + 2; ++n) {
    out.push_back(build_certificate(SchemeParams(n, k), t));
  }
  return out;
}

}  // namespace gjt
