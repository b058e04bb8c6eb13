// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Argument: directory holding connected_n<k>.g6.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "domgraph/bounds.hpp"
#include "domgraph/distances.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/graph_io.hpp"
#include "domgraph/harness.hpp"
#include "domgraph/treelift.hpp"
#include "fixtures.hpp"

using namespace domgraph;

namespace {

constexpr int kMaxN = 8;
constexpr std::size_t kConnectedCounts[] = {0, 0, 1, 2, 6, 21, 112, 853, 11117};

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int report(int id, const std::string& name, const Verdict& v) {
  std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << name;
  if (!v.detail.empty()) std::cout << "  (" << v.detail << ")";
  std::cout << std::endl;
  return v.ok ? 0 : 1;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: domgraph_acceptance <corpus-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];

  Verdict oracle, soundness, mod3, lifts;
  std::size_t graphs = 0, reports = 0, equality_triples = 0, lifted = 0;
  for (int n = 2; n <= kMaxN; ++n) {
    const auto lines = read_lines(dir / ("connected_n" + std::to_string(n) + ".g6"));
    if (lines.size() != kConnectedCounts[n]) {
      const std::string why = "n=" + std::to_string(n) + ": " + std::to_string(lines.size()) + " graphs, expected " +
                              std::to_string(kConnectedCounts[n]);
      oracle.fail(why);
      soundness.fail(why);
      mod3.fail(why);
      lifts.fail(why);
    }
    for (const auto& code : lines) {
      const Graph g = parse_graph6(code);
      ++graphs;

      // 1. exact solver against brute force
      const auto exact = gamma_exact(g);
      const auto brute = gamma_bruteforce_oracle(g);
      if (exact.gamma != brute.gamma || !is_dominating_set(g, exact.witness) ||
          static_cast<int>(exact.witness.size()) != exact.gamma) {
        oracle.fail(code);
      }

      // 2. and 4. every bound, r in {3, 4, 5}
      const auto rep = assemble_report(g);
      ++reports;
      if (rep.fatal) soundness.fail(code);
      for (const BoundCheck* c : rep.checks()) {
        if (!c->skipped && !c->holds) soundness.fail(code + " " + bound_name(*c));
      }
      for (const auto& eq : rep.triple_equalities) {
        ++equality_triples;
        for (int d : eq.distances) {
          if (d % 3 != 2) mod3.fail(code);
        }
      }

      // 5. lift every gamma-set, at most 50 per graph at n = 8
      auto sets = enumerate_min_dominating_sets(g);
      if (n == 8 && sets.size() > 50) sets.resize(50);
      for (const auto& m : sets) {
        const auto lift = lift_gamma_set_to_spanning_tree(g, m);
        const auto check = verify_lift(g, lift, m);
        const Graph tree = lift.tree(n);
        if (!check || gamma_bruteforce_oracle(tree).gamma != brute.gamma || !is_dominating_set(tree, m)) {
          lifts.fail(code);
        }
        ++lifted;
      }
    }
  }
  if (equality_triples == 0) mod3.fail("no equality triples found");

  const auto [spider, leaves] = testing::spider_graph({4, 4, 4});
  const auto spider_eq = triple_equality_analysis(gamma_exact(spider).gamma, DistanceMatrix(spider));
  const bool spider_found = std::any_of(spider_eq.begin(), spider_eq.end(), [&](const TripleEquality& e) {
    return VertexSet(e.triple.begin(), e.triple.end()) == leaves && e.distances == std::array<int, 3>{8, 8, 8};
  });
  if (!spider_found) mod3.fail("spider legs 4,4,4 lacks the (8,8,8) equality");

  int failures = 0;
  oracle.detail = oracle.ok ? std::to_string(graphs) + " graphs" : oracle.detail;
  failures += report(1, "gamma_exact equals brute force for connected n<=8", oracle);
  soundness.detail = soundness.ok ? std::to_string(reports) + " reports, 0 violations" : soundness.detail;
  failures += report(2, "no bound violated for connected n<=8", soundness);

  // 3. stars
  Verdict stars;
  for (int r = 3; r <= 12; ++r) {
    const Graph star = testing::star_graph(r);
    const DistanceMatrix dm(star);
    VertexSet star_leaves;
    for (int i = 1; i <= r; ++i) star_leaves.push_back(i);
    const int gamma = gamma_exact(star).gamma;
    const auto c = subset_lb(gamma, dm, star_leaves);
    std::int64_t sum = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) sum += dm(star_leaves[i], star_leaves[j]);
    }
    if (gamma != 1 || sum != r * (r - 1) || c.statistic != sum || !c.equality) {
      stars.fail("r=" + std::to_string(r));
    }
    if (r <= 12 && star.order() <= RSubsetOptions{}.exhaustive_max_order) {
      const auto best = r_subset_lb(gamma, dm, r);
      if (best.statistic != sum || !best.equality) stars.fail("r=" + std::to_string(r) + " maximum");
    }
  }
  failures += report(3, "K_{1,r} attains the r-subset bound for r=3..12", stars);

  mod3.detail = mod3.ok ? std::to_string(equality_triples) + " equality triples" : mod3.detail;
  failures += report(4, "equality triples have distances 2 mod 3; spider (8,8,8)", mod3);
  lifts.detail = lifts.ok ? std::to_string(lifted) + " gamma-sets lifted" : lifts.detail;
  failures += report(5, "every gamma-set lifts to a spanning tree keeping gamma", lifts);

  // 6. boundary bound
  Verdict boundary;
  {
    const Graph star = testing::star_graph(3);
    const DistanceMatrix dm(star);
    const auto bi = boundary_and_set_ecc(star, dm);
    const int gamma = gamma_exact(star).gamma;
    const auto c = boundary_ecc_lb(gamma, bi, dm);
    if (bi.ecc_of_boundary != 1 || 2 * gamma != bi.ecc_of_boundary + 1 || !c.equality) boundary.fail("K_{1,3}");
    for (const Graph& g : {testing::complete_graph(4), testing::cycle_graph(6), testing::complete_graph(2)}) {
      const DistanceMatrix d(g);
      const auto b = boundary_and_set_ecc(g, d);
      const auto k = boundary_ecc_lb(gamma_exact(g).gamma, b, d);
      if (static_cast<int>(b.boundary.size()) != g.order() || b.ecc_of_boundary != 0 || !k.holds) {
        boundary.fail("B = V case " + to_graph6(g));
      }
    }
  }
  failures += report(6, "K_{1,3} attains the boundary bound; B = V gives ecc 0", boundary);

  // 7. counterexample, recomputed
  Verdict counter;
  {
    const auto rep = fodig_counterexample_demo();
    const Graph& g = rep.graph;
    const auto brute = gamma_bruteforce_oracle(g);
    const DistanceMatrix dm(g);
    const auto& p = rep.diametral_path;
    const int length = static_cast<int>(p.size()) - 1;
    int joining = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const auto nu = g.closed_neighborhood(rep.gamma_set[0]);
      const auto nv = g.closed_neighborhood(rep.gamma_set[1]);
      const auto a = bit(p[i]);
      const auto b = bit(p[i + 1]);
      if (((nu & a) && (nv & b)) || ((nu & b) && (nv & a))) ++joining;
    }
    if (brute.gamma != 2 || !is_dominating_set(g, rep.gamma_set) || rep.gamma_set.size() != 2) counter.fail("gamma");
    if (length != dm.diameter() || length != 3 || dm(p.front(), p.back()) != 3) counter.fail("path length");
    if (!is_induced_path(g, p)) counter.fail("path not induced");
    if (joining != 3 || joining <= brute.gamma - 1 || rep.joining_edge_count != joining) counter.fail("joining edges");
    if (!rep.all_properties_hold()) counter.fail("report");
  }
  failures += report(7, "diametral-path counterexample recomputed", counter);

  // 8. determinism of verify --jsonl
  Verdict determinism;
  {
    const auto corpus = (dir / "connected_n6.g6").string();
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "4", "1"}) {
      const auto target = std::filesystem::temp_directory_path() /
                          ("domgraph_accept_" + std::string(jobs) + "_" + std::to_string(outputs.size()) + ".jsonl");
      const std::string target_s = target.string();
      const char* args[] = {"domgraph", "verify", corpus.c_str(), "--jsonl", target_s.c_str(), "-j", jobs};
      std::ostringstream out, err;
      const int code = cli::cli_main(7, args, out, err);
      if (code != cli::kExitOk) determinism.fail("exit code " + std::to_string(code));
      outputs.push_back(read_file(target));
      std::filesystem::remove(target);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1] || outputs[0] != outputs[2]) determinism.fail("outputs differ");
    if (determinism.ok) determinism.detail = std::to_string(outputs[0].size()) + " bytes x3";
  }
  failures += report(8, "verify --jsonl is byte-identical across runs", determinism);

  return failures == 0 ? 0 : 1;
}
