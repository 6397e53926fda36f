#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gjt/johnson.hpp"

namespace gjt {

/// A k-subset of [n] as a bitmask; bit i stands for element i + 1.
using SubsetMask = std::uint64_t;

/// Dynamically sized bitset used for adjacency rows and candidate sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Lowest set index, or size() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return bits_;
  }
  Bitset& operator&=(const Bitset& rhs) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= rhs.words_[w];
    return *this;
  }
  /// this &= ~rhs
  Bitset& subtract(const Bitset& rhs) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~rhs.words_[w];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// All k-subsets of [n] in colexicographic order (increasing mask value).
std::vector<SubsetMask> k_subsets(int n, int k);

/// Sorted 1-based elements of a subset.
std::vector<int> subset_elements(SubsetMask mask);
SubsetMask subset_from_elements(const std::vector<int>& elements);

/// G(n, k, L) with vertices in colexicographic order.
struct ExplicitGraph {
  LSystemSpec spec;
  std::vector<SubsetMask> labels;
  std::vector<Bitset> adjacency;

  std::size_t vertex_count() const { return labels.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }
  std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
  std::size_t edge_count() const;
};

inline constexpr std::size_t kDefaultMaterializeCap = 5000;

/// Builds the explicit graph. Throws CapError if C(n, k) exceeds `cap`,
/// RangeError if n > 64.
ExplicitGraph materialize(const LSystemSpec& spec, std::size_t cap = kDefaultMaterializeCap);

inline constexpr std::size_t kSpectrumCheckCap = 200;

/// Compares the exact eigenvalue table of G(n, k, L) with a dense numeric
/// eigendecomposition of the adjacency matrix (absolute tolerance 1e-6). Any n.
/// Throws CapError if C(n, k) exceeds 200.
bool numeric_spectrum_check(const LSystemSpec& spec);

/// Sorted numeric spectrum of a materialized graph.
std::vector<double> dense_spectrum(const ExplicitGraph& graph);

}  // namespace gjt
