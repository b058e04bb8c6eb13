#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "domgraph/bounds.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/graph.hpp"
#include "domgraph/graph_io.hpp"

namespace domgraph {

struct CorpusConfig {
  GraphFormat format = GraphFormat::Graph6;
  ReportConfig report;
  /// Malformed or disconnected input aborts the run instead of being skipped.
  bool strict = false;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// Also lift each graph's gamma-set witness to a spanning tree and verify it.
  bool check_lift = false;
  int max_enumeration_order = kDefaultMaxEnumerationOrder;
};

struct SkippedInput {
  std::size_t line = 0;
  std::string message;
};

struct TightInstance {
  std::string encoding;
  std::string bound;
};

struct CorpusSummary {
  std::size_t graphs_processed = 0;
  /// Graphs whose report is fatal or whose lift failed verification.
  std::size_t violations = 0;
  std::map<std::string, std::size_t> equality_counts;
  std::vector<TightInstance> tight_instances;
  std::vector<SkippedInput> skipped;
  double elapsed_seconds = 0.0;
};

/// Runs assemble_report over every graph in the corpus. Output order (and the
/// optional JSONL stream) follows input order regardless of `jobs`.
CorpusSummary verify_corpus(std::istream& in, const CorpusConfig& config, std::ostream* jsonl = nullptr);
CorpusSummary run_corpus_verify(const std::filesystem::path& path, const CorpusConfig& config,
                                std::ostream* jsonl = nullptr);

/// Accepts "diameter", "triple", "r-subset(<r>)", "average-distance" and
/// "boundary-ecc"; anything else raises UnknownBound. Returns the canonical name.
std::string canonical_bound_name(std::string_view bound);

/// Encodings of the corpus graphs attaining equality for `bound`, in input order.
std::vector<std::string> find_tight_instances(const std::filesystem::path& path, std::string_view bound,
                                              const CorpusConfig& config);
std::vector<std::string> find_tight_instances(std::istream& in, std::string_view bound,
                                              const CorpusConfig& config);

/// Six-vertex graph with gamma-set {u, v} and an induced diametral path whose
/// every edge joins N[u] to N[v].
struct CounterexampleReport {
  Graph graph;
  /// Display labels, indexed by vertex: u, v, 1, 2, 3, 4.
  std::vector<std::string> labels{};
  int gamma = 0;
  VertexSet gamma_set{};
  bool gamma_set_is_minimum = false;
  int diameter = 0;
  /// Induced path of length diam(G) with the most joining edges.
  VertexSet diametral_path{};
  bool path_induced = false;
  std::vector<Edge> joining_edges{};
  int joining_edge_count = 0;
  /// gamma - 1, the joining-edge count the refuted claim permits.
  int fodig_claim_bound = 0;
  bool refutes_claim = false;

  bool all_properties_hold() const;
};

CounterexampleReport fodig_counterexample_demo();

/// Number of edges of `path` with one endpoint in N[a] and the other in N[b].
int count_joining_edges(const Graph& g, std::span<const Vertex> path, Vertex a, Vertex b,
                        std::vector<Edge>* joining = nullptr);

/// True when consecutive vertices are adjacent, all are distinct and no other
/// pair of path vertices is adjacent.
bool is_induced_path(const Graph& g, std::span<const Vertex> path);

}  // namespace domgraph
