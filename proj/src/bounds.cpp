#include "domgraph/bounds.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "domgraph/domination.hpp"
#include "domgraph/error.hpp"

namespace domgraph {

namespace {

/// Fills the comparison fields for gamma >= bound_num / scale.
void decide(BoundCheck& check, int gamma, std::int64_t scale, std::int64_t bound_num) {
  check.value = Rational(bound_num, scale);
  check.slack = Rational(gamma) - check.value;
  check.scaled_gamma = scale * gamma;
  check.scaled_bound = bound_num;
  check.holds = check.scaled_gamma >= check.scaled_bound;
  check.equality = check.scaled_gamma == check.scaled_bound;
}

std::pair<Vertex, Vertex> diametral_pair(const DistanceMatrix& dm) {
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = u + 1; v < dm.order(); ++v) {
      if (dm(u, v) == dm.diameter()) return {u, v};
    }
  }
  return {0, 1};
}

bool next_combination(std::vector<Vertex>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

struct SubsetMax {
  std::int64_t sum = -1;
  VertexSet subset;

  void offer(std::int64_t s, const VertexSet& candidate) {
    if (s > sum || (s == sum && candidate < subset)) {
      sum = s;
      subset = candidate;
    }
  }
};

SubsetMax exhaustive_max(const DistanceMatrix& dm, int r) {
  SubsetMax best;
  VertexSet idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  do {
    const std::int64_t s = subset_distance_sum(dm, idx);
    // Lexicographic enumeration: the first maximiser seen is the least one.
    if (s > best.sum) {
      best.sum = s;
      best.subset = idx;
    }
  } while (next_combination(idx, dm.order()));
  return best;
}

SubsetMax sampled_max(const DistanceMatrix& dm, int r, const RSubsetOptions& options) {
  const int n = dm.order();
  SubsetMax best;
  VertexSet first(r);
  for (int i = 0; i < r; ++i) first[i] = i;
  best.offer(subset_distance_sum(dm, first), first);

  // Farthest-point greedy from every start vertex.
  for (Vertex start = 0; start < n; ++start) {
    VertexSet chosen{start};
    std::vector<std::int64_t> to_chosen(n, 0);
    std::vector<bool> used(n, false);
    used[start] = true;
    while (static_cast<int>(chosen.size()) < r) {
      const Vertex last = chosen.back();
      Vertex pick = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (used[v]) continue;
        to_chosen[v] += dm(v, last);
        if (pick < 0 || to_chosen[v] > to_chosen[pick]) pick = v;
      }
      used[pick] = true;
      chosen.push_back(pick);
    }
    VertexSet sorted = normalized(chosen);
    best.offer(subset_distance_sum(dm, sorted), sorted);
  }

  std::mt19937_64 rng(options.seed);
  VertexSet pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int s = 0; s < options.samples; ++s) {
    for (int i = 0; i < r; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    VertexSet sample(pool.begin(), pool.begin() + r);
    std::sort(sample.begin(), sample.end());
    best.offer(subset_distance_sum(dm, sample), sample);
  }
  return best;
}

BoundCheck skipped_check(BoundKind kind, int r, std::string reason) {
  BoundCheck check;
  check.kind = kind;
  check.r = r;
  check.skipped = true;
  check.skip_reason = std::move(reason);
  return check;
}

}  // namespace

std::string bound_name(const BoundCheck& check) {
  switch (check.kind) {
    case BoundKind::Diameter: return "diameter";
    case BoundKind::Triple: return "triple";
    case BoundKind::RSubset: return "r-subset(" + std::to_string(check.r) + ")";
    case BoundKind::AverageDistance: return "average-distance";
    case BoundKind::BoundaryEcc: return "boundary-ecc";
  }
  return "unknown";
}

std::int64_t subset_distance_sum(const DistanceMatrix& dm, std::span<const Vertex> subset) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) total += dm(subset[i], subset[j]);
  }
  return total;
}

BoundCheck diameter_lb(int gamma, const DistanceMatrix& dm) {
  BoundCheck check;
  check.kind = BoundKind::Diameter;
  check.statistic = dm.diameter();
  decide(check, gamma, 3, dm.diameter() + 1);
  // Value is the integer ceiling of (diam + 1) / 3.
  check.value = Rational(check.value.ceil());
  check.slack = Rational(gamma) - check.value;
  check.equality = check.slack == Rational(0);
  const auto [u, v] = diametral_pair(dm);
  check.witness = {u, v};
  return check;
}

BoundCheck best_triple_lb(int gamma, const DistanceMatrix& dm) {
  const int n = dm.order();
  if (n < 3) return skipped_check(BoundKind::Triple, 3, "order below 3");
  int best = -1;
  VertexSet witness;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const int s = dm(a, b) + dm(a, c) + dm(b, c);
        if (s > best) {
          best = s;
          witness = {a, b, c};
        }
      }
    }
  }
  BoundCheck check;
  check.kind = BoundKind::Triple;
  check.r = 3;
  check.statistic = best;
  check.witness = std::move(witness);
  decide(check, gamma, 6, best);
  return check;
}

std::vector<TripleEquality> triple_equality_analysis(int gamma, const DistanceMatrix& dm) {
  std::vector<TripleEquality> out;
  const int n = dm.order();
  const int target = 6 * gamma;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const std::array<int, 3> d{dm(a, b), dm(a, c), dm(b, c)};
        if (d[0] + d[1] + d[2] != target) continue;
        TripleEquality eq;
        eq.triple = {a, b, c};
        eq.distances = d;
        eq.consistent = std::all_of(d.begin(), d.end(), [](int x) { return x % 3 == 2; });
        out.push_back(eq);
      }
    }
  }
  return out;
}

BoundCheck r_subset_lb(int gamma, const DistanceMatrix& dm, int r, const RSubsetOptions& options) {
  const int n = dm.order();
  if (r < 3 || r > n) {
    throw Error(ErrorKind::BadR, "r = " + std::to_string(r) + " must satisfy 3 <= r <= " + std::to_string(n));
  }
  const bool exhaustive = n <= options.exhaustive_max_order;
  SubsetMax best = exhaustive ? exhaustive_max(dm, r) : sampled_max(dm, r, options);
  BoundCheck check;
  check.kind = BoundKind::RSubset;
  check.r = r;
  check.exhaustive = exhaustive;
  check.statistic = best.sum;
  check.witness = std::move(best.subset);
  decide(check, gamma, static_cast<std::int64_t>(r) * (r - 1), best.sum);
  return check;
}

BoundCheck subset_lb(int gamma, const DistanceMatrix& dm, std::span<const Vertex> subset) {
  const VertexSet members = normalized(VertexSet(subset.begin(), subset.end()));
  const int r = static_cast<int>(members.size());
  if (r < 3 || r != static_cast<int>(subset.size()) || members.front() < 0 || members.back() >= dm.order()) {
    throw Error(ErrorKind::BadR, "subset must hold at least 3 distinct vertices of the graph");
  }
  BoundCheck check;
  check.kind = BoundKind::RSubset;
  check.r = r;
  check.statistic = subset_distance_sum(dm, members);
  check.witness = members;
  decide(check, gamma, static_cast<std::int64_t>(r) * (r - 1), check.statistic);
  return check;
}

BoundCheck average_distance_lb(int gamma, const DistanceMatrix& dm) {
  const std::int64_t n = dm.order();
  BoundCheck check;
  check.kind = BoundKind::AverageDistance;
  check.statistic = wiener_index(dm);
  decide(check, gamma, n * (n - 1), check.statistic);
  return check;
}

BoundCheck average_distance_lb(int gamma, const Graph& g) {
  return average_distance_lb(gamma, DistanceMatrix(g));
}

BoundCheck boundary_ecc_lb(int gamma, const BoundaryInfo& bi, const DistanceMatrix& dm) {
  BoundCheck check;
  check.kind = BoundKind::BoundaryEcc;
  check.statistic = bi.ecc_of_boundary;
  check.witness = bi.boundary;
  decide(check, gamma, 2, bi.ecc_of_boundary + 1);

  SpadeDiagnostic spade;
  std::tie(spade.x, spade.y) = diametral_pair(dm);
  spade.z = bi.witness;
  spade.sum = dm(spade.x, spade.y) + dm(spade.x, spade.z) + dm(spade.y, spade.z);
  spade.rhs = 3 * bi.ecc_of_boundary + 1;
  spade.holds = spade.sum >= spade.rhs;
  check.spade = spade;
  return check;
}

void validate(const ReportConfig& config) {
  for (int r : config.r_values) {
    if (r < 3) throw Error(ErrorKind::BadR, "r = " + std::to_string(r) + " is below 3");
  }
}

std::vector<const BoundCheck*> BoundReport::checks() const {
  std::vector<const BoundCheck*> out{&diameter_check, &triple_check};
  for (const auto& c : r_subset_checks) out.push_back(&c);
  out.push_back(&average_distance_check);
  out.push_back(&boundary_ecc_check);
  return out;
}

BoundReport assemble_report(const Graph& g, const ReportConfig& config) {
  validate(config);
  BoundReport report;
  report.order = g.order();
  report.size = g.size();
  const DominationResult dom = gamma_exact(g);
  report.gamma = dom.gamma;
  report.gamma_set = dom.witness;

  const DistanceMatrix dm(g);
  report.diameter = dm.diameter();
  report.wiener = wiener_index(dm);
  report.boundary = boundary_and_set_ecc(g, dm);

  report.diameter_check = diameter_lb(report.gamma, dm);
  report.triple_check = best_triple_lb(report.gamma, dm);
  for (int r : config.r_values) {
    if (r > g.order()) {
      report.r_subset_checks.push_back(skipped_check(BoundKind::RSubset, r, "r exceeds order"));
    } else {
      report.r_subset_checks.push_back(r_subset_lb(report.gamma, dm, r, config.r_subset));
    }
  }
  report.average_distance_check = average_distance_lb(report.gamma, dm);
  report.boundary_ecc_check = boundary_ecc_lb(report.gamma, report.boundary, dm);
  if (g.order() >= 3) report.triple_equalities = triple_equality_analysis(report.gamma, dm);

  for (const BoundCheck* c : report.checks()) {
    if (!c->skipped && !c->holds) report.failures.push_back(bound_name(*c) + " violated");
  }
  if (!report.boundary_ecc_check.spade->holds) report.failures.push_back("boundary-ecc diagnostic sum below 3R+1");
  for (const auto& eq : report.triple_equalities) {
    if (!eq.consistent) {
      report.failures.push_back("equality triple (" + std::to_string(eq.triple[0]) + "," +
                                std::to_string(eq.triple[1]) + "," + std::to_string(eq.triple[2]) +
                                ") has a distance not congruent to 2 mod 3");
    }
  }
  report.fatal = !report.failures.empty();
  return report;
}

}  // namespace domgraph
