#include "gjt/graph.hpp"

#include <string>

#include "gjt/binomial.hpp"
#include "gjt/error.hpp"

namespace gjt {

std::vector<SubsetMask> k_subsets(int n, int k) {
  std::vector<SubsetMask> out;
  if (k < 0 || k > n || n > 64) return out;
  if (k == 0) return {0};
  const SubsetMask limit = n == 64 ? 0 : (SubsetMask{1} << n);
  SubsetMask x = (k == 64) ? ~SubsetMask{0} : ((SubsetMask{1} << k) - 1);
  while (true) {
    out.push_back(x);
    // Gosper's hack: next larger integer with the same popcount.
    const SubsetMask c = x & (~x + 1);
    const SubsetMask r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
    if (limit != 0 && x >= limit) break;
  }
  return out;
}

std::vector<int> subset_elements(SubsetMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

SubsetMask subset_from_elements(const std::vector<int>& elements) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw RangeError("subset element " + std::to_string(e) + " outside [1, 64]");
    mask |= SubsetMask{1} << (e - 1);
  }
  return mask;
}

std::size_t ExplicitGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

ExplicitGraph materialize(const LSystemSpec& spec, std::size_t cap) {
  const int n = spec.params().n();
  const int k = spec.params().k();
  if (n > 64) throw RangeError("explicit graphs need n <= 64 (got n=" + std::to_string(n) + ")");
  const BigInt count = binom(n, k);
  if (count > static_cast<unsigned long>(cap)) {
    throw CapError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + count.get_str() +
                   " vertices exceeds the cap of " + std::to_string(cap));
  }
  ExplicitGraph g{spec, k_subsets(n, k), {}};
  const std::size_t v = g.labels.size();
  g.adjacency.assign(v, Bitset(v));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const int s = std::popcount(g.labels[a] & g.labels[b]);
      if (!spec.allows(s)) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
    }
  }
  return g;
}

}  // namespace gjt
