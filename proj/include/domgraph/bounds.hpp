#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domgraph/distances.hpp"
#include "domgraph/graph.hpp"
#include "domgraph/rational.hpp"

namespace domgraph {

enum class BoundKind { Diameter, Triple, RSubset, AverageDistance, BoundaryEcc };

/// The (x, y, z) distance sum from the boundary argument: x, y a diametral
/// pair and z the vertex farthest from the boundary. It always satisfies
/// sum >= 3R + 1.
struct SpadeDiagnostic {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  int sum = 0;
  int rhs = 0;
  bool holds = true;
};

/// Outcome of one lower-bound check gamma >= value.
///
/// Every check is decided in cross-multiplied integer form
/// `scaled_gamma >= scaled_bound`. For the diameter bound the value is the
/// integer ceiling, so equality means gamma == ceil((diam + 1) / 3).
struct BoundCheck {
  BoundKind kind = BoundKind::Diameter;
  /// Subset size for r-subset checks (3 for the triple check).
  int r = 0;
  bool skipped = false;
  std::string skip_reason;

  Rational value;
  /// gamma - value.
  Rational slack;
  bool holds = true;
  bool equality = false;
  std::int64_t scaled_gamma = 0;
  std::int64_t scaled_bound = 0;

  /// diam, S_r, W or R depending on the kind.
  std::int64_t statistic = 0;
  /// Lexicographically least maximiser (diametral pair, triple or r-subset).
  VertexSet witness;
  /// False when an r-subset maximum came from sampling rather than enumeration.
  bool exhaustive = true;

  std::optional<SpadeDiagnostic> spade;
};

/// Canonical bound name: "diameter", "triple", "r-subset(4)",
/// "average-distance" or "boundary-ecc".
std::string bound_name(const BoundCheck& check);

BoundCheck diameter_lb(int gamma, const DistanceMatrix& dm);

/// Maximises d(a,b) + d(a,c) + d(b,c) over all triples. Skipped when n < 3.
BoundCheck best_triple_lb(int gamma, const DistanceMatrix& dm);

struct TripleEquality {
  std::array<Vertex, 3> triple{};
  /// d(a,b), d(a,c), d(b,c).
  std::array<int, 3> distances{};
  /// All three distances are 2 mod 3.
  bool consistent = true;
};

/// Every triple with 6 * gamma == S_3, in lexicographic order.
std::vector<TripleEquality> triple_equality_analysis(int gamma, const DistanceMatrix& dm);

struct RSubsetOptions {
  /// Exhaustive maximisation is used up to this order; beyond it the maximum
  /// is taken over deterministic candidates (farthest-point greedy subsets and
  /// seeded random samples).
  int exhaustive_max_order = 12;
  int samples = 2048;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Throws BadR unless 3 <= r <= n.
BoundCheck r_subset_lb(int gamma, const DistanceMatrix& dm, int r, const RSubsetOptions& options = {});

/// Evaluates the r-subset check on one given subset (r = |subset| >= 3).
BoundCheck subset_lb(int gamma, const DistanceMatrix& dm, std::span<const Vertex> subset);

/// Sum of pairwise distances within `subset`.
std::int64_t subset_distance_sum(const DistanceMatrix& dm, std::span<const Vertex> subset);

BoundCheck average_distance_lb(int gamma, const DistanceMatrix& dm);
BoundCheck average_distance_lb(int gamma, const Graph& g);

BoundCheck boundary_ecc_lb(int gamma, const BoundaryInfo& bi, const DistanceMatrix& dm);

struct ReportConfig {
  std::vector<int> r_values{3, 4, 5};
  RSubsetOptions r_subset;
};

/// Throws BadR if any configured r is below 3.
void validate(const ReportConfig& config);

struct BoundReport {
  int order = 0;
  std::size_t size = 0;
  int gamma = 0;
  VertexSet gamma_set;
  int diameter = 0;
  std::int64_t wiener = 0;
  BoundaryInfo boundary;

  BoundCheck diameter_check;
  BoundCheck triple_check;
  /// One entry per configured r; r > n entries are marked skipped.
  std::vector<BoundCheck> r_subset_checks;
  BoundCheck average_distance_check;
  BoundCheck boundary_ecc_check;
  std::vector<TripleEquality> triple_equalities;

  /// Set when any check is violated or an equality triple breaks the mod-3 rule.
  bool fatal = false;
  std::vector<std::string> failures;

  std::vector<const BoundCheck*> checks() const;
};

BoundReport assemble_report(const Graph& g, const ReportConfig& config = {});

}  // namespace domgraph
