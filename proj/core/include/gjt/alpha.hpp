#pragma once

#include <chrono>
#include <cstddef>
#include <string_view>
#include <vector>

#include "gjt/graph.hpp"
#include "gjt/johnson.hpp"

namespace gjt {

/// A family of k-subsets of [n], each a sorted list of 1-based elements.
struct WitnessFamily {
  LSystemSpec spec;
  std::vector<std::vector<int>> sets;
};

/// True iff the sets are distinct k-subsets of [n] and every pairwise intersection size lies in L.
bool is_valid_system(const WitnessFamily& family);

enum class AlphaStatus { exact, lower_bound };
std::string_view to_string(AlphaStatus status);

struct AlphaOptions {
  std::size_t cap = 1000;
  std::chrono::duration<double> budget = std::chrono::seconds(300);
};

struct AlphaResult {
  std::size_t size = 0;
  AlphaStatus status = AlphaStatus::lower_bound;
  WitnessFamily witness;
  std::size_t nodes = 0;  // search nodes expanded
};

/// The largest s-star {F : [s] subset of F} that is an (n, k, L)-system, for the
/// given size limit. Always non-empty: the k-star is a single set.
WitnessFamily best_star(const LSystemSpec& spec, std::size_t size_limit);

/// Upper bound on alpha(G(n, k, L)): floor(theta'), tightened by the counting
/// recursions |F| <= n U(n-1, k-1, L-1) / k (sets through a point) and
/// |F| <= n U(n-1, k, L) / (n-k) (sets avoiding a point).
BigInt alpha_upper_bound(const LSystemSpec& spec);

/// Maximum independent set of G(n, k, L), i.e. a largest (n, k, L)-system.
///
/// When 2k > n the search runs on the complementary (n, n-k, L')-system. The
/// incumbent starts at best_star and is improved by a seeded local search; then
/// an exhaustive branch and bound on the compatibility graph (adjacent = meeting
/// in an allowed size) with greedy-coloring bounds either finishes or stops once
/// the incumbent reaches alpha_upper_bound. The witness is the seed when the
/// seed is optimal, otherwise the first strictly larger family met by the
/// deterministic search. Instances over `cap` vertices, or searches that overrun
/// the budget, come back flagged as lower bounds.
AlphaResult alpha_bruteforce(const LSystemSpec& spec, const AlphaOptions& options = {});

/// Result of a plain maximum-clique search on an arbitrary graph.
struct CliqueResult {
  std::vector<std::size_t> clique;
  bool complete = true;  // false when the deadline cut the search short
  std::size_t nodes = 0;
};

/// Maximum clique in the graph whose adjacency rows are `adjacency`, starting
/// from `incumbent` (which must be a clique). No symmetry assumptions.
CliqueResult max_clique(const std::vector<Bitset>& adjacency, std::vector<std::size_t> incumbent,
                        std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max());

/// Compatibility graph of G(n, k, L): distinct vertices adjacent iff their intersection size is in L.
std::vector<Bitset> compatibility_rows(const ExplicitGraph& graph);

}  // namespace gjt
