#include "gjt/johnson.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "gjt/binomial.hpp"
#include "gjt/error.hpp"

namespace gjt {

SchemeParams::SchemeParams(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n) {
    throw RangeError("scheme parameters require 1 <= k <= n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
}

LSystemSpec::LSystemSpec(SchemeParams params, std::vector<int> allowed)
    : params_(params), allowed_(std::move(allowed)) {
  std::sort(allowed_.begin(), allowed_.end());
  allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
  for (int s : allowed_) {
    if (s < 0 || s >= params_.k()) {
      throw RangeError("intersection size " + std::to_string(s) + " outside [0, k-1] = [0, " +
                       std::to_string(params_.k() - 1) + "]");
    }
  }
}

LSystemSpec LSystemSpec::missing_one(SchemeParams params, int missing) {
  if (missing < 0 || missing >= params.k()) {
    throw RangeError("missing intersection size " + std::to_string(missing) + " outside [0, k-1]");
  }
  std::vector<int> allowed;
  for (int s = 0; s < params.k(); ++s) {
    if (s != missing) allowed.push_back(s);
  }
  return LSystemSpec(params, std::move(allowed));
}

bool LSystemSpec::allows(int s) const { return std::binary_search(allowed_.begin(), allowed_.end(), s); }

std::string LSystemSpec::allowed_str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < allowed_.size(); ++i) os << (i ? "," : "") << allowed_[i];
  os << '}';
  return os.str();
}

SchemeVector::SchemeVector(SchemeParams params) : params_(params), entries_(params.k() + 1) {}

SchemeVector::SchemeVector(SchemeParams params, std::vector<Rational> entries)
    : params_(params), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(params_.k() + 1)) {
    throw RangeError("scheme vector needs k+1 = " + std::to_string(params_.k() + 1) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

SchemeVector SchemeVector::ones(SchemeParams params) {
  return SchemeVector(params, std::vector<Rational>(params.k() + 1, Rational(1)));
}

SchemeVector SchemeVector::identity(SchemeParams params) {
  SchemeVector v(params);
  v[params.k()] = 1;
  return v;
}

SchemeVector SchemeVector::adjacency(const LSystemSpec& spec) {
  SchemeVector v(spec.params());
  for (int s = 0; s < spec.params().k(); ++s) {
    if (!spec.allows(s)) v[s] = 1;
  }
  return v;
}

void SchemeVector::check_same(const SchemeVector& rhs) const {
  if (!(params_ == rhs.params_)) throw RangeError("scheme vectors from different schemes");
}

SchemeVector& SchemeVector::operator+=(const SchemeVector& rhs) {
  check_same(rhs);
  for (std::size_t s = 0; s < entries_.size(); ++s) entries_[s] += rhs.entries_[s];
  return *this;
}

SchemeVector& SchemeVector::operator-=(const SchemeVector& rhs) {
  check_same(rhs);
  for (std::size_t s = 0; s < entries_.size(); ++s) entries_[s] -= rhs.entries_[s];
  return *this;
}

SchemeVector& SchemeVector::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Rational EigTable::max() const {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (multiplicities[j] > 0 && (!best || values[j] > *best)) best = values[j];
  }
  return *best;  // m_0 = 1 always
}

Rational EigTable::min() const {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (multiplicities[j] > 0 && (!best || values[j] < *best)) best = values[j];
  }
  return *best;
}

std::vector<int> EigTable::argmin() const {
  const Rational lo = min();
  std::vector<int> out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (multiplicities[j] > 0 && values[j] == lo) out.push_back(static_cast<int>(j));
  }
  return out;
}

BigInt eberlein(const SchemeParams& params, int r, int j) {
  const int n = params.n();
  const int k = params.k();
  if (r < 0 || r > k || j < 0 || j > k) {
    throw RangeError("eberlein requires 0 <= r, j <= k (got r=" + std::to_string(r) + ", j=" + std::to_string(j) +
                     ", k=" + std::to_string(k) + ")");
  }
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) {
    BigInt term = binom(j, i) * binom(k - j, r - i) * binom(n - k - j, r - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt multiplicity(const SchemeParams& params, int j) {
  if (j < 0 || j > params.k()) {
    throw RangeError("eigenspace index " + std::to_string(j) + " outside [0, k]");
  }
  if (j > params.n() - params.k()) return 0;
  return binom(params.n(), j) - binom(params.n(), j - 1);
}

EigTable eig_of_vector(const SchemeVector& v) {
  const SchemeParams& p = v.params();
  const int k = p.k();
  EigTable table{p, {}, {}};
  table.values.reserve(k + 1);
  table.multiplicities.reserve(k + 1);
  for (int j = 0; j <= k; ++j) {
    Rational mu;
    for (int s = 0; s <= k; ++s) {
      if (v[s].sign() != 0) mu += v[s] * Rational(eberlein(p, k - s, j));
    }
    table.values.push_back(std::move(mu));
    table.multiplicities.push_back(multiplicity(p, j));
  }
  return table;
}

}  // namespace gjt
