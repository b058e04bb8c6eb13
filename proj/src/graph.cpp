#include "domgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "domgraph/error.hpp"

namespace domgraph {

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 2) {
    throw Error(ErrorKind::OrderTooSmall, "graph order " + std::to_string(order) + " is below 2");
  }
  if (order > kMaxOrder) {
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(order) + " exceeds " +
                                         std::to_string(kMaxOrder));
  }
  std::vector<std::vector<Vertex>> adj(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") outside 0.." +
                                                   std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  std::vector<bool> seen(order, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != order) {
    const auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw Error(ErrorKind::Disconnected,
                "vertex " + std::to_string(missing) + " is unreachable from vertex 0");
  }
  return Graph(order, std::move(adj));
}

Graph::Graph(int order, std::vector<std::vector<Vertex>> adj)
    : order_(order), adj_(std::move(adj)), closed_(order) {
  for (Vertex v = 0; v < order_; ++v) {
    closed_[v] = bit(v) | mask_of(adj_[v]);
    size_ += adj_[v].size();
  }
  size_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return (closed_.at(u) & bit(v)) != 0 && u != v;
}

VertexMask Graph::all_vertices() const noexcept {
  return order_ == 64 ? ~VertexMask{0} : bit(order_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexMask mask_of(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

VertexSet vertices_of(VertexMask mask) {
  VertexSet out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace domgraph
