#include "domgraph/harness.hpp"

#include <algorithm>

#include "domgraph/distances.hpp"

namespace domgraph {

namespace {

// Vertex ids for the labels u, v, 1, 2, 3, 4.
constexpr Vertex kU = 0;
constexpr Vertex kV = 1;
constexpr Vertex kP1 = 2;
constexpr Vertex kP2 = 3;
constexpr Vertex kP3 = 4;
constexpr Vertex kP4 = 5;

void extend_paths(const Graph& g, VertexSet& path, int length, std::vector<VertexSet>& out) {
  if (static_cast<int>(path.size()) == length + 1) {
    // Each undirected path once, oriented from its smaller end.
    if (path.front() < path.back() && is_induced_path(g, path)) out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(path.back())) {
    if (std::find(path.begin(), path.end(), w) != path.end()) continue;
    path.push_back(w);
    extend_paths(g, path, length, out);
    path.pop_back();
  }
}

std::vector<VertexSet> induced_paths_of_length(const Graph& g, int length) {
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    VertexSet path{s};
    extend_paths(g, path, length, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_induced_path(const Graph& g, std::span<const Vertex> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) return false;
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

int count_joining_edges(const Graph& g, std::span<const Vertex> path, Vertex a, Vertex b,
                        std::vector<Edge>* joining) {
  const VertexMask na = g.closed_neighborhood(a);
  const VertexMask nb = g.closed_neighborhood(b);
  int count = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexMask x = bit(path[i]);
    const VertexMask y = bit(path[i + 1]);
    if (((x & na) && (y & nb)) || ((x & nb) && (y & na))) {
      ++count;
      if (joining != nullptr) joining->push_back({path[i], path[i + 1]});
    }
  }
  return count;
}

bool CounterexampleReport::all_properties_hold() const {
  return gamma == 2 && gamma_set_is_minimum && path_induced &&
         static_cast<int>(diametral_path.size()) == diameter + 1 && refutes_claim;
}

CounterexampleReport fodig_counterexample_demo() {
  const std::vector<Edge> edges{
      {kP1, kP2}, {kP2, kP3}, {kP3, kP4},  // the path 1-2-3-4
      {kU, kP1},  {kU, kP3},                // u dominates 1 and 3
      {kV, kP2},  {kV, kP4},                // v dominates 2 and 4
  };
  CounterexampleReport rep{.graph = Graph::from_edges(6, edges), .labels = {"u", "v", "1", "2", "3", "4"}};
  const Graph& g = rep.graph;

  rep.gamma = gamma_exact(g).gamma;
  rep.gamma_set = {kU, kV};
  rep.gamma_set_is_minimum =
      is_dominating_set(g, rep.gamma_set) && static_cast<int>(rep.gamma_set.size()) == rep.gamma;

  const DistanceMatrix dm(g);
  rep.diameter = dm.diameter();

  // Among all induced paths of length diam(G), report the one with the most
  // edges joining N[u] to N[v] (lexicographically least on ties).
  int best = -1;
  for (const VertexSet& path : induced_paths_of_length(g, rep.diameter)) {
    const int joins = count_joining_edges(g, path, kU, kV);
    if (joins > best) {
      best = joins;
      rep.diametral_path = path;
    }
  }
  rep.path_induced = !rep.diametral_path.empty() && is_induced_path(g, rep.diametral_path);
  rep.joining_edge_count = count_joining_edges(g, rep.diametral_path, kU, kV, &rep.joining_edges);
  rep.fodig_claim_bound = rep.gamma - 1;
  rep.refutes_claim = rep.joining_edge_count > rep.fodig_claim_bound;
  return rep;
}

}  // namespace domgraph
