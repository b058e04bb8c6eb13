#pragma once

#include <optional>
#include <span>
#include <vector>

#include "domgraph/graph.hpp"

namespace domgraph {

/// Default guard on exhaustive subset enumeration.
inline constexpr int kDefaultMaxEnumerationOrder = 20;

struct DominationResult {
  int gamma = 0;
  /// Lexicographically least minimum dominating set.
  VertexSet witness;
  /// Every minimum dominating set in lexicographic order, when requested.
  std::optional<std::vector<VertexSet>> all_min_sets;
};

/// True iff N[s] covers every vertex. Throws VertexOutOfRange for bad members.
bool is_dominating_set(const Graph& g, std::span<const Vertex> s);

struct DominationOptions {
  bool enumerate_all = false;
  int max_enumeration_order = kDefaultMaxEnumerationOrder;
};

/// Exact domination number by branch-and-bound over closed neighbourhoods.
///
/// The search branches on the uncovered vertex with the fewest remaining
/// candidate dominators and prunes with a counting bound and a packing bound
/// (uncovered vertices with pairwise disjoint candidate sets each need their
/// own dominator). A greedy cover seeds the incumbent and the distance lower
/// bounds (diameter and best triple) stop the search as soon as they are met.
/// The returned witness is the lexicographically least gamma-set.
DominationResult gamma_exact(const Graph& g, const DominationOptions& options = {});

/// Subset enumeration in increasing size, then lexicographic order. Shares no
/// code with gamma_exact. Throws TooLarge when order > max_order.
DominationResult gamma_bruteforce_oracle(const Graph& g, int max_order = kDefaultMaxEnumerationOrder);

/// All minimum dominating sets, lexicographically sorted.
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g,
                                                     int max_order = kDefaultMaxEnumerationOrder);

}  // namespace domgraph
