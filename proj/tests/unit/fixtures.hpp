#pragma once

// Graph families and independent oracles shared by the unit tests. Nothing in
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "domgraph/graph.hpp"

namespace domgraph::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

/// K_{1,r} with centre 0 and leaves 1..r.
inline Graph star_graph(int r) {
  std::vector<Edge> edges;
  for (int i = 1; i <= r; ++i) edges.push_back({0, i});
  return Graph::from_edges(r + 1, edges);
}

/// Centre 0 with one pendant path per entry of `legs`; returns the graph and
/// the leaf of each leg.
inline std::pair<Graph, VertexSet> spider_graph(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  VertexSet leaves;
  int next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int k = 0; k < len; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    leaves.push_back(prev);
  }
  return {Graph::from_edges(next, edges), leaves};
}

/// Every connected labelled graph on n vertices (n <= 6 keeps this cheap).
inline void for_each_connected_labelled(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) slots.push_back({i, j});
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (code >> k & 1) edges.push_back(slots[k]);
    }
    // Cheap rejection before the validating constructor.
    if (static_cast<int>(edges.size()) < n - 1) continue;
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    int parts = n;
    for (const Edge& e : edges) {
      const int a = find(e.u);
      const int b = find(e.v);
      if (a != b) {
        comp[a] = b;
        --parts;
      }
    }
    if (parts == 1) fn(Graph::from_edges(n, edges));
  }
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({order[i], order[parent(rng)]});
  }
  std::bernoulli_distribution extra(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (extra(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

/// Shortest path lengths by enumerating every simple path (exponential; n <= 7).
inline std::vector<std::vector<int>> distances_by_path_enumeration(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> best(n, std::vector<int>(n, n + 1));
  std::vector<bool> on_path(n, false);
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex source, Vertex v, int len) {
    best[source][v] = std::min(best[source][v], len);
    on_path[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!on_path[w]) walk(source, w, len + 1);
    }
    on_path[v] = false;
  };
  for (Vertex s = 0; s < n; ++s) walk(s, s, 0);
  return best;
}

/// Domination check by explicit neighbour scan (no masks).
inline bool dominates(const Graph& g, const VertexSet& s) {
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : s) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

/// All k-subsets of 0..n-1 in lexicographic order.
inline std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  VertexSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace domgraph::testing
