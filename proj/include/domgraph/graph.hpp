#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace domgraph {

using Vertex = int;
/// Vertex sets are kept as strictly increasing sequences.
using VertexSet = std::vector<Vertex>;
/// Bit v set <=> vertex v is a member.
using VertexMask = std::uint64_t;

/// Closed neighbourhoods are stored as 64-bit masks, which caps the order.
inline constexpr int kMaxOrder = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected connected graph on vertices 0..n-1.
///
/// Construction validates everything the downstream algorithms assume:
/// order in [2, kMaxOrder], no self-loops, endpoints in range and
/// connectivity. Duplicate edges (in either orientation) are collapsed.
class Graph {
 public:
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  /// Number of edges.
  std::size_t size() const noexcept { return size_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// N[v] as a mask.
  VertexMask closed_neighborhood(Vertex v) const { return closed_.at(v); }
  VertexMask all_vertices() const noexcept;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Graph(int order, std::vector<std::vector<Vertex>> adj);

  int order_ = 0;
  std::size_t size_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> closed_;
};

inline constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

VertexMask mask_of(std::span<const Vertex> vertices);
VertexSet vertices_of(VertexMask mask);

/// Sorts and deduplicates.
VertexSet normalized(VertexSet s);

}  // namespace domgraph
