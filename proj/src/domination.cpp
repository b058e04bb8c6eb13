#include "domgraph/domination.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "domgraph/distances.hpp"
#include "domgraph/error.hpp"

namespace domgraph {

namespace {

int popcount(VertexMask m) { return std::popcount(m); }

Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Largest of the diameter and best-triple lower bounds on gamma.
int distance_floor(const Graph& g) {
  const DistanceMatrix dm(g);
  const int n = g.order();
  int floor = (dm.diameter() + 1 + 2) / 3;
  int best_triple = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const int ab = dm(a, b);
      for (Vertex c = b + 1; c < n; ++c) best_triple = std::max(best_triple, ab + dm(a, c) + dm(b, c));
    }
  }
  floor = std::max(floor, (best_triple + 5) / 6);
  return std::max(floor, 1);
}

/// Minimum dominating set search over bit masks. `forced` vertices must be in
/// the solution and `excluded` vertices must stay out of it.
class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : n_(g.order()), all_(g.all_vertices()), closed_(n_) {
    for (Vertex v = 0; v < n_; ++v) closed_[v] = g.closed_neighborhood(v);
  }

  /// Smallest dominating set honouring the constraints with size < limit, or
  /// nullopt. The search stops early once a solution of size <= target is
  /// known, since callers pass a proven lower bound as target.
  std::optional<VertexMask> minimize(VertexMask forced, VertexMask excluded, int limit, int target) {
    best_size_ = limit;
    best_.reset();
    target_ = target;
    if (const auto greedy = greedy_cover(forced, excluded); greedy && popcount(*greedy) < best_size_) {
      best_size_ = popcount(*greedy);
      best_ = *greedy;
    }
    if (best_size_ > target_) {
      VertexMask covered = 0;
      for (VertexMask f = forced; f != 0; f &= f - 1) covered |= closed_[lowest(f)];
      search(forced, popcount(forced), covered, excluded | forced);
    }
    return best_;
  }

 private:
  std::optional<VertexMask> greedy_cover(VertexMask chosen, VertexMask excluded) const {
    VertexMask covered = 0;
    for (VertexMask f = chosen; f != 0; f &= f - 1) covered |= closed_[lowest(f)];
    while (covered != all_) {
      int best_gain = 0;
      Vertex pick = -1;
      for (Vertex w = 0; w < n_; ++w) {
        if ((excluded | chosen) & bit(w)) continue;
        const int gain = popcount(closed_[w] & ~covered);
        if (gain > best_gain) {
          best_gain = gain;
          pick = w;
        }
      }
      if (pick < 0) return std::nullopt;
      chosen |= bit(pick);
      covered |= closed_[pick];
    }
    return chosen;
  }

  int lower_bound(VertexMask uncovered, VertexMask blocked) const {
    const int remaining = popcount(uncovered);
    int max_gain = 0;
    for (Vertex w = 0; w < n_; ++w) {
      if (!(blocked & bit(w))) max_gain = std::max(max_gain, popcount(closed_[w] & uncovered));
    }
    if (max_gain == 0) return n_ + 1;
    const int counting = (remaining + max_gain - 1) / max_gain;

    // Uncovered vertices with pairwise disjoint candidate sets need distinct dominators.
    int packing = 0;
    VertexMask used = 0;
    for (VertexMask u = uncovered; u != 0; u &= u - 1) {
      const VertexMask candidates = closed_[lowest(u)] & ~blocked;
      if ((candidates & used) == 0) {
        used |= candidates;
        ++packing;
      }
    }
    return std::max(counting, packing);
  }

  void search(VertexMask chosen, int count, VertexMask covered, VertexMask blocked) {
    if (covered == all_) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    const VertexMask uncovered = all_ & ~covered;
    if (count + lower_bound(uncovered, blocked) >= best_size_) return;

    Vertex branch_on = -1;
    int fewest = n_ + 1;
    for (VertexMask u = uncovered; u != 0; u &= u - 1) {
      const Vertex v = lowest(u);
      const int options = popcount(closed_[v] & ~blocked);
      if (options < fewest) {
        fewest = options;
        branch_on = v;
      }
    }
    if (fewest == 0) return;

    std::vector<Vertex> options = vertices_of(closed_[branch_on] & ~blocked);
    std::stable_sort(options.begin(), options.end(), [&](Vertex a, Vertex b) {
      return popcount(closed_[a] & uncovered) > popcount(closed_[b] & uncovered);
    });
    for (Vertex w : options) {
      search(chosen | bit(w), count + 1, covered | closed_[w], blocked | bit(w));
      if (best_size_ <= target_) return;
      // Later branches assume w stays out.
      blocked |= bit(w);
    }
  }

  int n_;
  VertexMask all_;
  std::vector<VertexMask> closed_;
  int best_size_ = 0;
  int target_ = 0;
  std::optional<VertexMask> best_;
};

void check_members(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
    }
  }
}

void check_enumeration_order(const Graph& g, int max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(g.order()) +
                                         " exceeds the enumeration cap " + std::to_string(max_order));
  }
}

/// Advances `idx` to the next k-combination of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

bool is_dominating_set(const Graph& g, std::span<const Vertex> s) {
  check_members(g, s);
  VertexMask covered = 0;
  for (Vertex v : s) covered |= g.closed_neighborhood(v);
  return covered == g.all_vertices();
}

DominationResult gamma_exact(const Graph& g, const DominationOptions& options) {
  CoverSearch search(g);
  const int floor = distance_floor(g);
  const auto best = search.minimize(0, 0, g.order() + 1, floor);
  DominationResult result;
  result.gamma = popcount(*best);

  // Rebuild the lexicographically least gamma-set one position at a time:
  // take the smallest vertex that still admits a completion of size gamma.
  VertexMask chosen = 0;
  VertexMask skipped = 0;
  Vertex next = 0;
  for (int slot = 0; slot < result.gamma; ++slot) {
    for (Vertex v = next; v < g.order(); ++v) {
      if (search.minimize(chosen | bit(v), skipped, result.gamma + 1, result.gamma)) {
        chosen |= bit(v);
        next = v + 1;
        break;
      }
      skipped |= bit(v);
    }
  }
  result.witness = vertices_of(chosen);

  if (options.enumerate_all) {
    result.all_min_sets = enumerate_min_dominating_sets(g, options.max_enumeration_order);
  }
  return result;
}

DominationResult gamma_bruteforce_oracle(const Graph& g, int max_order) {
  check_enumeration_order(g, max_order);
  const int n = g.order();
  std::vector<bool> covered(n);
  for (int k = 1; k <= n; ++k) {
    auto idx = first_combination(k);
    do {
      std::fill(covered.begin(), covered.end(), false);
      for (int v : idx) {
        covered[v] = true;
        for (Vertex w : g.neighbors(v)) covered[w] = true;
      }
      if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
        return DominationResult{k, VertexSet(idx.begin(), idx.end()), std::nullopt};
      }
    } while (next_combination(idx, n));
  }
  // The full vertex set always dominates.
  throw std::logic_error("gamma_bruteforce_oracle: no dominating set found");
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g, int max_order) {
  check_enumeration_order(g, max_order);
  const int n = g.order();
  const VertexMask all = g.all_vertices();
  std::vector<VertexSet> sets;
  for (int k = 1; k <= n && sets.empty(); ++k) {
    auto idx = first_combination(k);
    do {
      VertexMask covered = 0;
      for (int v : idx) covered |= g.closed_neighborhood(v);
      if (covered == all) sets.emplace_back(idx.begin(), idx.end());
    } while (next_combination(idx, n));
  }
  return sets;
}

}  // namespace domgraph
