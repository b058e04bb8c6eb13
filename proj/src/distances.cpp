#include "domgraph/distances.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace domgraph {

DistanceMatrix::DistanceMatrix(const Graph& g)
    : order_(g.order()), d_(static_cast<std::size_t>(order_) * order_, -1), ecc_(order_, 0) {
  std::vector<Vertex> queue(order_);
  for (Vertex s = 0; s < order_; ++s) {
    int* dist = d_.data() + index(s, 0);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    ecc_[s] = *std::max_element(dist, dist + order_);
  }
  diam_ = *std::max_element(ecc_.begin(), ecc_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

std::int64_t wiener_index(const DistanceMatrix& dm) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = u + 1; v < dm.order(); ++v) total += dm(u, v);
  }
  return total;
}

std::int64_t wiener_index(const Graph& g) { return wiener_index(DistanceMatrix(g)); }

Rational average_distance(const DistanceMatrix& dm) {
  const std::int64_t n = dm.order();
  return Rational(wiener_index(dm), n * (n - 1));
}

Rational average_distance(const Graph& g) { return average_distance(DistanceMatrix(g)); }

int distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set) {
  if (set.empty()) throw std::invalid_argument("distance_to_set: empty set");
  int best = std::numeric_limits<int>::max();
  for (Vertex s : set) best = std::min(best, dm(v, s));
  return best;
}

int set_eccentricity(const DistanceMatrix& dm, std::span<const Vertex> set) {
  int worst = 0;
  for (Vertex x = 0; x < dm.order(); ++x) worst = std::max(worst, distance_to_set(dm, x, set));
  return worst;
}

BoundaryInfo boundary_and_set_ecc(const Graph& g, const DistanceMatrix& dm) {
  if (g.order() != dm.order()) {
    throw std::invalid_argument("boundary_and_set_ecc: distance matrix does not match graph");
  }
  BoundaryInfo info;
  for (Vertex v = 0; v < dm.order(); ++v) {
    if (dm.eccentricity(v) == dm.diameter()) info.boundary.push_back(v);
  }
  info.ecc_of_boundary = -1;
  for (Vertex x = 0; x < dm.order(); ++x) {
    const int d = distance_to_set(dm, x, info.boundary);
    if (d > info.ecc_of_boundary) {
      info.ecc_of_boundary = d;
      info.witness = x;
    }
  }
  return info;
}

}  // namespace domgraph
