#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "domgraph/graph.hpp"
#include "domgraph/rational.hpp"

namespace domgraph {

/// All-pairs hop distances with per-vertex eccentricities and the diameter.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const noexcept { return order_; }
  int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  std::span<const int> row(Vertex v) const {
    return std::span<const int>(d_).subspan(static_cast<std::size_t>(v) * order_, order_);
  }

  int eccentricity(Vertex v) const { return ecc_.at(v); }
  std::span<const int> eccentricities() const noexcept { return ecc_; }
  int diameter() const noexcept { return diam_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * order_ + static_cast<std::size_t>(v);
  }

  int order_;
  std::vector<int> d_;
  std::vector<int> ecc_;
  int diam_ = 0;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Sum of distances over unordered vertex pairs.
std::int64_t wiener_index(const DistanceMatrix& dm);
std::int64_t wiener_index(const Graph& g);

/// W(G) / (n(n-1)), reduced.
Rational average_distance(const DistanceMatrix& dm);
Rational average_distance(const Graph& g);

/// min over s in `set` of d(v, s). `set` must be nonempty.
int distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set);
/// max over all vertices x of d(x, set).
int set_eccentricity(const DistanceMatrix& dm, std::span<const Vertex> set);

struct BoundaryInfo {
  /// Vertices whose eccentricity equals the diameter.
  VertexSet boundary;
  /// Eccentricity of the boundary as a set.
  int ecc_of_boundary = 0;
  /// Lowest-indexed vertex attaining ecc_of_boundary.
  Vertex witness = 0;
};

BoundaryInfo boundary_and_set_ecc(const Graph& g, const DistanceMatrix& dm);

}  // namespace domgraph
