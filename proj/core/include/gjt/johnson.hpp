#pragma once

#include <string>
#include <vector>

#include "gjt/rational.hpp"

namespace gjt {

/// Ground-set size n and uniformity k of the Johnson scheme J(n, k).
class SchemeParams {
 public:
  /// Throws RangeError unless 1 <= k <= n.
  SchemeParams(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

 private:
  int n_;
  int k_;
};

/// The triple (n, k, L): k-subsets of [n] whose pairwise intersections lie in L.
class LSystemSpec {
 public:
  /// `allowed` is sorted and deduplicated; throws RangeError if it leaves [0, k-1].
  LSystemSpec(SchemeParams params, std::vector<int> allowed);

  /// L = {0, ..., k-1} \ {missing}, the graph usually written G(n, k, missing).
  static LSystemSpec missing_one(SchemeParams params, int missing);

  const SchemeParams& params() const { return params_; }
  const std::vector<int>& allowed() const { return allowed_; }
  /// True if intersection size s is permitted between distinct members (s = k is never).
  bool allows(int s) const;
  /// True if two k-sets meeting in s points are non-adjacent (s in L, or s = k).
  bool non_edge(int s) const { return s == params_.k() || allows(s); }

  /// "{0,2}" style rendering.
  std::string allowed_str() const;

  friend bool operator==(const LSystemSpec&, const LSystemSpec&) = default;

 private:
  SchemeParams params_;
  std::vector<int> allowed_;
};

/// Bose-Mesner algebra element of J(n, k): entry e_s between k-sets meeting in s points.
class SchemeVector {
 public:
  explicit SchemeVector(SchemeParams params);
  SchemeVector(SchemeParams params, std::vector<Rational> entries);

  static SchemeVector ones(SchemeParams params);
  static SchemeVector identity(SchemeParams params);
  /// Adjacency matrix of G(n, k, L): 1 on classes s not in L, s < k.
  static SchemeVector adjacency(const LSystemSpec& spec);

  const SchemeParams& params() const { return params_; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](int s) const { return entries_[s]; }
  Rational& operator[](int s) { return entries_[s]; }

  SchemeVector& operator+=(const SchemeVector& rhs);
  SchemeVector& operator-=(const SchemeVector& rhs);
  SchemeVector& operator*=(const Rational& scalar);
  friend SchemeVector operator+(SchemeVector a, const SchemeVector& b) { return a += b; }
  friend SchemeVector operator-(SchemeVector a, const SchemeVector& b) { return a -= b; }
  friend SchemeVector operator*(const Rational& c, SchemeVector v) { return v *= c; }
  friend bool operator==(const SchemeVector&, const SchemeVector&) = default;

 private:
  void check_same(const SchemeVector& rhs) const;

  SchemeParams params_;
  std::vector<Rational> entries_;
};

/// Eigenvalues mu_0..mu_k of a scheme element, one per common eigenspace.
struct EigTable {
  SchemeParams params;
  std::vector<Rational> values;
  std::vector<BigInt> multiplicities;

  /// Extremes over eigenspaces of positive dimension.
  Rational max() const;
  Rational min() const;
  /// Every j with m_j > 0 attaining min().
  std::vector<int> argmin() const;
};

/// Eigenvalue on eigenspace j of the distance-r graph (pairs with |A \ B| = r).
///   E_r(j) = sum_i (-1)^i C(j, i) C(k - j, r - i) C(n - k - j, r - i)
/// Throws RangeError unless 0 <= r, j <= k.
BigInt eberlein(const SchemeParams& params, int r, int j);

/// Dimension of eigenspace j: C(n, j) - C(n, j - 1) for j <= min(k, n - k), else 0.
BigInt multiplicity(const SchemeParams& params, int j);

/// mu_j = sum_s e_s E_{k-s}(j).
EigTable eig_of_vector(const SchemeVector& v);

}  // namespace gjt
