#include "domgraph/treelift.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domgraph/error.hpp"

namespace domgraph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int gamma_of(const Graph& g, int max_enumeration_order) {
  if (g.order() <= max_enumeration_order) return gamma_bruteforce_oracle(g, max_enumeration_order).gamma;
  return gamma_exact(g).gamma;
}

}  // namespace

std::string_view to_string(LiftFailure reason) noexcept {
  switch (reason) {
    case LiftFailure::None: return "None";
    case LiftFailure::SizeMismatch: return "SizeMismatch";
    case LiftFailure::NotSubgraph: return "NotSubgraph";
    case LiftFailure::NotSpanningTree: return "NotSpanningTree";
    case LiftFailure::DominatorNotAdjacent: return "DominatorNotAdjacent";
    case LiftFailure::MNotDominating: return "MNotDominating";
    case LiftFailure::GammaMismatch: return "GammaMismatch";
  }
  return "Unknown";
}

SpanningTreeLift lift_gamma_set_to_spanning_tree(const Graph& g, std::span<const Vertex> m) {
  const VertexSet members = normalized(VertexSet(m.begin(), m.end()));
  if (members.size() != m.size()) throw Error(ErrorKind::NotAGammaSet, "set contains repeated vertices");
  if (!is_dominating_set(g, members)) throw Error(ErrorKind::NotAGammaSet, "set is not dominating");
  const int gamma = gamma_exact(g).gamma;
  if (static_cast<int>(members.size()) != gamma) {
    throw Error(ErrorKind::NotAGammaSet, "set has size " + std::to_string(members.size()) +
                                             " but gamma is " + std::to_string(gamma));
  }

  const int n = g.order();
  const VertexMask in_m = mask_of(members);
  SpanningTreeLift lift;
  lift.dominator_of.assign(n, -1);
  DisjointSets components(n);
  for (Vertex v = 0; v < n; ++v) {
    if (in_m & bit(v)) continue;
    const auto nbrs = g.neighbors(v);
    // Neighbour lists are sorted, so the first hit is the lowest index.
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return (in_m & bit(w)) != 0; });
    lift.dominator_of[v] = *it;
    lift.tree_edges.push_back(ordered(v, *it));
    components.unite(v, *it);
  }

  for (const Edge& e : g.edges()) {
    if (static_cast<int>(lift.tree_edges.size()) == n - 1) break;
    if (components.unite(e.u, e.v)) {
      lift.connector_edges.push_back(e);
      lift.tree_edges.push_back(e);
    }
  }
  std::sort(lift.tree_edges.begin(), lift.tree_edges.end());
  return lift;
}

LiftVerification verify_lift(const Graph& g, const SpanningTreeLift& lift, std::span<const Vertex> m,
                             int max_enumeration_order) {
  const int n = g.order();
  auto fail = [](LiftFailure reason) { return LiftVerification{false, reason}; };

  if (static_cast<int>(lift.dominator_of.size()) != n) return fail(LiftFailure::SizeMismatch);
  VertexMask in_m = 0;
  for (Vertex v : m) {
    if (v < 0 || v >= n) return fail(LiftFailure::SizeMismatch);
    in_m |= bit(v);
  }

  for (const Edge& e : lift.tree_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v)) {
      return fail(LiftFailure::NotSubgraph);
    }
  }

  if (static_cast<int>(lift.tree_edges.size()) != n - 1) return fail(LiftFailure::NotSpanningTree);
  DisjointSets components(n);
  for (const Edge& e : lift.tree_edges) {
    // n-1 edges with no cycle on n vertices form a spanning tree.
    if (!components.unite(e.u, e.v)) return fail(LiftFailure::NotSpanningTree);
  }
  std::vector<Edge> sorted_tree = lift.tree_edges;
  for (Edge& e : sorted_tree) e = ordered(e.u, e.v);
  std::sort(sorted_tree.begin(), sorted_tree.end());
  auto in_tree = [&](Vertex a, Vertex b) {
    return std::binary_search(sorted_tree.begin(), sorted_tree.end(), ordered(a, b));
  };
  for (const Edge& e : lift.connector_edges) {
    if (!in_tree(e.u, e.v)) return fail(LiftFailure::NotSpanningTree);
  }

  for (Vertex v = 0; v < n; ++v) {
    const Vertex d = lift.dominator_of[v];
    if (in_m & bit(v)) {
      if (d != -1) return fail(LiftFailure::DominatorNotAdjacent);
      continue;
    }
    if (d < 0 || d >= n || !(in_m & bit(d)) || !in_tree(v, d)) {
      return fail(LiftFailure::DominatorNotAdjacent);
    }
  }

  const Graph tree = Graph::from_edges(n, sorted_tree);
  const VertexSet members = vertices_of(in_m);
  if (!is_dominating_set(tree, members)) return fail(LiftFailure::MNotDominating);

  const int size = static_cast<int>(members.size());
  if (gamma_of(tree, max_enumeration_order) != size || gamma_of(g, max_enumeration_order) != size) {
    return fail(LiftFailure::GammaMismatch);
  }
  return LiftVerification{true, LiftFailure::None};
}

}  // namespace domgraph
