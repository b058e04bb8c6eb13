#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "domgraph/domination.hpp"
#include "domgraph/graph.hpp"

namespace domgraph {

/// A spanning tree of G in which a given gamma(G)-set M is still a
/// minimum dominating set.
struct SpanningTreeLift {
  /// Tree edges with u < v, sorted. Kept as a plain edge list so a tampered
  /// or broken lift can still be represented and rejected by verify_lift.
  std::vector<Edge> tree_edges;
  /// dominator_of[v] is v's chosen neighbour in M, or -1 when v is in M.
  std::vector<Vertex> dominator_of;
  /// Edges added to join the stars around M into a single tree.
  std::vector<Edge> connector_edges;

  /// The tree as a Graph; throws if the edge list is not connected.
  Graph tree(int order) const { return Graph::from_edges(order, tree_edges); }
};

/// Builds the lift in two deterministic steps:
///  1. every vertex outside M attaches to its lowest-indexed neighbour in M,
///     giving a forest of stars centred on M;
///  2. edges of G are scanned in lexicographic order and every edge joining
///     two different components is added until one component remains.
/// Throws NotAGammaSet unless M is a minimum dominating set of G.
SpanningTreeLift lift_gamma_set_to_spanning_tree(const Graph& g, std::span<const Vertex> m);

enum class LiftFailure {
  None,
  SizeMismatch,
  NotSubgraph,
  NotSpanningTree,
  DominatorNotAdjacent,
  MNotDominating,
  GammaMismatch,
};

std::string_view to_string(LiftFailure reason) noexcept;

struct LiftVerification {
  bool ok = false;
  LiftFailure reason = LiftFailure::None;

  explicit operator bool() const noexcept { return ok; }
};

/// Re-checks every lift invariant from scratch. gamma(tree) is recomputed
/// with the brute-force oracle when the order is within `max_enumeration_order`
/// and with gamma_exact otherwise.
LiftVerification verify_lift(const Graph& g, const SpanningTreeLift& lift, std::span<const Vertex> m,
                             int max_enumeration_order = kDefaultMaxEnumerationOrder);

}  // namespace domgraph
