#include "gjt/alpha.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "gjt/binomial.hpp"
#include "gjt/bounds.hpp"
#include "gjt/error.hpp"

namespace gjt {

namespace {

using Clock = std::chrono::steady_clock;

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adjacency, std::vector<std::size_t> incumbent, Clock::time_point deadline,
               std::size_t target = SIZE_MAX)
      : adj_(adjacency), best_(std::move(incumbent)), deadline_(deadline), target_(target) {}

  // Extends the clique `prefix` with vertices from `candidates`.
  void run(std::vector<std::size_t> prefix, const Bitset& candidates) {
    if (reached_target()) return;
    current_ = std::move(prefix);
    if (candidates.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    expand(candidates);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  bool timed_out() const { return timed_out_; }
  bool reached_target() const { return best_.size() >= target_; }
  std::size_t nodes() const { return nodes_; }

 private:
  // Sequential greedy colouring of p in index order; colours[i] bounds the
  // clique size among order[0..i].
  void colour(Bitset p, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
    std::size_t c = 0;
    while (!p.none()) {
      ++c;
      Bitset q = p;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        p.reset(v);
        q.subtract(adj_[v]);
        order.push_back(v);
        colours.push_back(c);
      }
    }
  }

  void expand(Bitset p) {
    if ((++nodes_ & 1023U) == 0 && Clock::now() > deadline_) timed_out_ = true;
    if (timed_out_ || reached_target()) return;

    std::vector<std::size_t> order;
    std::vector<std::size_t> colours;
    order.reserve(p.count());
    colours.reserve(order.capacity());
    colour(p, order, colours);

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colours[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      const Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      p.reset(v);
      if (timed_out_ || reached_target()) return;
    }
  }

  const std::vector<Bitset>& adj_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
  Clock::time_point deadline_;
  std::size_t target_;
  bool timed_out_ = false;
  std::size_t nodes_ = 0;
};

// Iterated local search for a large clique of the compatibility graph, in the
// style of Andrade, Resende and Werneck: greedy insertion and (1,2)-swaps, with
// forced insertions as perturbation. Works on the conflict graph, where a clique
// of the compatibility graph is an independent set. Fixed seed, so the result
// depends only on the inputs (unless the deadline cuts it short).
class LocalSearch {
 public:
  LocalSearch(const std::vector<Bitset>& compat, const std::vector<std::size_t>& start)
      : compat_(compat), v_(compat.size()), in_(v_, false), tight_(v_, 0) {
    for (std::size_t u = 0; u < v_; ++u) {
      Bitset row(v_);
      for (std::size_t w = 0; w < v_; ++w) {
        if (w != u && !compat_[u].test(w)) row.set(w);
      }
      conflict_.push_back(std::move(row));
    }
    for (std::size_t u : start) insert(u);
  }

  std::vector<std::size_t> run(std::size_t iterations, std::size_t target, Clock::time_point deadline) {
    std::mt19937 rng(0x5eed);
    descend(rng);
    std::vector<std::size_t> best = members();
    for (std::size_t it = 0; it < iterations && best.size() < target; ++it) {
      if ((it & 63U) == 0 && Clock::now() > deadline) break;
      const auto saved_in = in_;
      const auto saved_tight = tight_;
      const std::size_t saved_size = size_;

      perturb(rng);
      descend(rng);
      if (size_ > best.size()) best = members();
      // Keep equal or better moves; occasionally accept a worse one.
      if (size_ < saved_size && std::uniform_int_distribution<int>(0, 9)(rng) != 0) {
        in_ = saved_in;
        tight_ = saved_tight;
        size_ = saved_size;
      }
    }
    return best;
  }

 private:
  void insert(std::size_t u) {
    in_[u] = true;
    ++size_;
    conflict_[u].for_each([&](std::size_t w) { ++tight_[w]; });
  }
  void remove(std::size_t u) {
    in_[u] = false;
    --size_;
    conflict_[u].for_each([&](std::size_t w) { --tight_[w]; });
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < v_; ++u) {
      if (in_[u]) out.push_back(u);
    }
    return out;
  }

  // Forces a random outside vertex in, evicting its conflicts.
  void perturb(std::mt19937& rng) {
    if (size_ == v_) return;
    std::uniform_int_distribution<std::size_t> pick(0, v_ - 1);
    std::size_t u = pick(rng);
    while (in_[u]) u = pick(rng);
    conflict_[u].for_each([&](std::size_t w) {
      if (in_[w]) remove(w);
    });
    insert(u);
  }

  // Free insertions and (1,2)-swaps until neither applies.
  void descend(std::mt19937& rng) {
    std::vector<std::size_t> order(v_);
    for (std::size_t u = 0; u < v_; ++u) order[u] = u;
    for (bool improved = true; improved;) {
      improved = false;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t u : order) {
        if (!in_[u] && tight_[u] == 0) insert(u);
      }
      for (std::size_t x : order) {
        if (!in_[x]) continue;
        std::vector<std::size_t> one_tight;
        conflict_[x].for_each([&](std::size_t w) {
          if (!in_[w] && tight_[w] == 1) one_tight.push_back(w);
        });
        for (std::size_t i = 0; i < one_tight.size() && !improved; ++i) {
          for (std::size_t j = i + 1; j < one_tight.size(); ++j) {
            if (compat_[one_tight[i]].test(one_tight[j])) {
              remove(x);
              insert(one_tight[i]);
              insert(one_tight[j]);
              improved = true;
              break;
            }
          }
        }
      }
    }
  }

  const std::vector<Bitset>& compat_;
  std::size_t v_;
  std::vector<Bitset> conflict_;
  std::vector<bool> in_;
  std::vector<std::size_t> tight_;
  std::size_t size_ = 0;
};

constexpr std::size_t kLocalSearchIterations = 20000;
constexpr std::size_t kCanonicalNodeLimit = 200000;

// Depth-first search in index order for a clique of exactly `size` vertices;
// the first one found is the lexicographically least. Gives up after
// `node_limit` nodes, so the outcome never depends on timing.
class LeastClique {
 public:
  LeastClique(const std::vector<Bitset>& adjacency, std::size_t size, std::size_t node_limit)
      : adj_(adjacency), size_(size), node_limit_(node_limit) {}

  std::optional<std::vector<std::size_t>> find(std::size_t root) {
    current_ = {root};
    if (extend(adj_[root])) return current_;
    return std::nullopt;
  }

 private:
  // Greedy colour count: an upper bound on the clique number of p.
  std::size_t colour_bound(Bitset p) const {
    std::size_t c = 0;
    while (!p.none()) {
      ++c;
      Bitset q = p;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        p.reset(v);
        q.subtract(adj_[v]);
      }
    }
    return c;
  }

  bool extend(Bitset p) {
    if (current_.size() == size_) return true;
    if (++nodes_ > node_limit_) return false;
    if (current_.size() + colour_bound(p) < size_) return false;
    while (!p.none()) {
      const std::size_t v = p.first();
      p.reset(v);
      current_.push_back(v);
      if (extend(p & adj_[v])) return true;
      current_.pop_back();
      if (nodes_ > node_limit_) return false;
    }
    return false;
  }

  const std::vector<Bitset>& adj_;
  std::size_t size_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> current_;
};

struct SpecKey {
  int n;
  int k;
  std::vector<int> allowed;
  auto operator<=>(const SpecKey&) const = default;
};

BigInt upper_bound_memo(int n, int k, const std::vector<int>& allowed, std::map<SpecKey, BigInt>& memo) {
  if (k == n) return 1;
  if (k == 1) return allowed.empty() ? BigInt(1) : BigInt(n);
  const SpecKey key{n, k, allowed};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Rational tp = theta_prime_lp(LSystemSpec(SchemeParams(n, k), allowed));
  BigInt best = tp.numerator() / tp.denominator();

  std::vector<int> shifted;
  for (int l : allowed) {
    if (l >= 1) shifted.push_back(l - 1);
  }
  const BigInt through = BigInt(n) * upper_bound_memo(n - 1, k - 1, shifted, memo) / BigInt(k);
  const BigInt avoiding = BigInt(n) * upper_bound_memo(n - 1, k, allowed, memo) / BigInt(n - k);
  best = std::min({best, through, avoiding});
  memo.emplace(key, best);
  return best;
}

Clock::time_point deadline_after(std::chrono::duration<double> budget) {
  const auto now = Clock::now();
  if (budget >= std::chrono::duration<double>(Clock::time_point::max() - now)) return Clock::time_point::max();
  return now + std::chrono::duration_cast<Clock::duration>(budget);
}

LSystemSpec complement_spec(const LSystemSpec& spec) {
  const int n = spec.params().n();
  const int k = spec.params().k();
  std::vector<int> allowed;
  for (int l : spec.allowed()) {
    if (l >= 2 * k - n) allowed.push_back(l - (2 * k - n));
  }
  return LSystemSpec(SchemeParams(n, n - k), allowed);
}

}  // namespace

BigInt alpha_upper_bound(const LSystemSpec& spec) {
  std::map<SpecKey, BigInt> memo;
  return upper_bound_memo(spec.params().n(), spec.params().k(), spec.allowed(), memo);
}

std::string_view to_string(AlphaStatus status) {
  return status == AlphaStatus::exact ? "exact" : "lower-bound";
}

bool is_valid_system(const WitnessFamily& family) {
  const int n = family.spec.params().n();
  const auto k = static_cast<std::size_t>(family.spec.params().k());
  for (const auto& set : family.sets) {
    if (set.size() != k) return false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > n) return false;
      if (i > 0 && set[i - 1] >= set[i]) return false;
    }
  }
  for (std::size_t a = 0; a < family.sets.size(); ++a) {
    for (std::size_t b = a + 1; b < family.sets.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(family.sets[a].begin(), family.sets[a].end(), family.sets[b].begin(),
                            family.sets[b].end(), std::back_inserter(common));
      if (common.size() == k) return false;  // duplicate
      if (!family.spec.allows(static_cast<int>(common.size()))) return false;
    }
  }
  return true;
}

WitnessFamily best_star(const LSystemSpec& spec, std::size_t size_limit) {
  const int n = spec.params().n();
  const int k = spec.params().k();
  if (n > 64) throw RangeError("explicit families need n <= 64 (got n=" + std::to_string(n) + ")");
  int chosen = k;
  for (int s = 0; s < k; ++s) {
    const BigInt size = binom(n - s, k - s);
    if (size > static_cast<unsigned long>(size_limit)) continue;
    bool valid = true;
    for (int i = std::max(0, 2 * (k - s) - (n - s)); i <= k - s - 1; ++i) valid = valid && spec.allows(s + i);
    if (valid) {
      chosen = s;
      break;
    }
  }
  const SubsetMask core = chosen == 0 ? 0 : ((SubsetMask{1} << chosen) - 1);
  WitnessFamily w{spec, {}};
  for (SubsetMask rest : k_subsets(n - chosen, k - chosen)) {
    w.sets.push_back(subset_elements(core | (rest << chosen)));
  }
  return w;
}

std::vector<Bitset> compatibility_rows(const ExplicitGraph& graph) {
  const std::size_t v = graph.vertex_count();
  std::vector<Bitset> rows(v, Bitset(v));
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      if (a != b && !graph.adjacent(a, b)) rows[a].set(b);
    }
  }
  return rows;
}

CliqueResult max_clique(const std::vector<Bitset>& adjacency, std::vector<std::size_t> incumbent,
                        Clock::time_point deadline) {
  Bitset all(adjacency.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) all.set(v);
  CliqueSearch search(adjacency, std::move(incumbent), deadline);
  if (!all.none()) search.run({}, all);
  return CliqueResult{search.best(), !search.timed_out(), search.nodes()};
}

AlphaResult alpha_bruteforce(const LSystemSpec& spec, const AlphaOptions& options) {
  const int n = spec.params().n();
  const int k = spec.params().k();
  if (n > 64) throw RangeError("alpha search needs n <= 64 (got n=" + std::to_string(n) + ")");

  const BigInt vertex_count = binom(n, k);
  if (vertex_count > static_cast<unsigned long>(options.cap)) {
    WitnessFamily seed = best_star(spec, options.cap);
    const std::size_t size = seed.sets.size();
    return AlphaResult{size, AlphaStatus::lower_bound, std::move(seed), 0};
  }

  // Complementing every set maps (n, k, L)-systems onto (n, n-k, L')-systems
  // with L' = {l - (2k - n)}, so search whichever side has the smaller k.
  const bool flipped = 2 * k > n && k < n;
  const LSystemSpec search_spec = flipped ? complement_spec(spec) : spec;
  const SubsetMask full = n == 64 ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
  const auto orient = [&](SubsetMask mask) { return flipped ? (mask ^ full) : mask; };

  const ExplicitGraph graph = materialize(search_spec, options.cap);
  const std::vector<Bitset> compat = compatibility_rows(graph);
  const std::size_t v = graph.vertex_count();

  WitnessFamily seed = best_star(spec, v);
  std::vector<std::size_t> incumbent;
  for (const auto& set : seed.sets) {
    const SubsetMask mask = orient(subset_from_elements(set));
    incumbent.push_back(static_cast<std::size_t>(
        std::lower_bound(graph.labels.begin(), graph.labels.end(), mask) - graph.labels.begin()));
  }

  const BigInt bound = alpha_upper_bound(spec);
  const std::size_t target = bound.fits_ulong_p() ? static_cast<std::size_t>(bound.get_ui()) : SIZE_MAX;
  const Clock::time_point deadline = deadline_after(options.budget);

  std::vector<std::size_t> start = incumbent;
  if (start.size() < target) {
    std::vector<std::size_t> found = LocalSearch(compat, incumbent).run(kLocalSearchIterations, target, deadline);
    if (found.size() > start.size()) start = std::move(found);
  }

  // G(n,k,L) is vertex-transitive, so some maximum family contains vertex 0.
  // The stabilizer of vertex 0 is transitive on vertices meeting it in s points,
  // so a family containing 0 and any such vertex can be mapped to one containing
  // the colex-first representative. Branch on s in increasing order; branch s
  // excludes classes handled by earlier branches.
  CliqueSearch search(compat, start, deadline, target);
  const SubsetMask root = graph.labels[0];
  Bitset remaining = compat[0];
  for (int s : search_spec.allowed()) {
    if (search.timed_out() || search.reached_target()) break;
    std::size_t rep = v;
    Bitset cls(v);
    remaining.for_each([&](std::size_t u) {
      if (std::popcount(graph.labels[u] & root) == s) {
        cls.set(u);
        rep = std::min(rep, u);
      }
    });
    if (rep == v) continue;
    Bitset candidates = remaining & compat[rep];
    search.run({0, rep}, candidates);
    remaining.subtract(cls);
  }

  const bool exact = search.reached_target() || !search.timed_out();
  const std::size_t size = search.best().size();
  WitnessFamily witness{spec, {}};
  if (size == seed.sets.size()) {
    witness = std::move(seed);
    return AlphaResult{size, exact ? AlphaStatus::exact : AlphaStatus::lower_bound, std::move(witness),
                       search.nodes()};
  }

  std::vector<SubsetMask> masks;
  for (std::size_t i : search.best()) masks.push_back(orient(graph.labels[i]));
  std::sort(masks.begin(), masks.end());
  if (exact) {
    // Replace by the colex-least maximum family. By vertex-transitivity one
    // contains vertex 0, the colex-first set, so that is the only root needed.
    std::optional<ExplicitGraph> original;
    std::vector<Bitset> original_compat;
    if (flipped) {
      original = materialize(spec, options.cap);
      original_compat = compatibility_rows(*original);
    }
    const ExplicitGraph& colex_graph = flipped ? *original : graph;
    if (auto least = LeastClique(flipped ? original_compat : compat, size, kCanonicalNodeLimit).find(0)) {
      masks.clear();
      for (std::size_t i : *least) masks.push_back(colex_graph.labels[i]);
    }
  }
  for (SubsetMask m : masks) witness.sets.push_back(subset_elements(m));
  return AlphaResult{size, exact ? AlphaStatus::exact : AlphaStatus::lower_bound, std::move(witness),
                     search.nodes()};
}

}  // namespace gjt
