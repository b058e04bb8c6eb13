// Test-support generator: every graph on n vertices up to isomorphism, written
// as graph6 (connected ones only unless --all). Graphs of order n are produced
// by adding a vertex with every possible neighbourhood to each graph of order
// n-1 and keeping one canonical form per isomorphism class.
//
// Canonical form: vertices are ordered by iterated colour refinement (an
// isomorphism-invariant ordered partition); the code is the maximum
// upper-triangle bit string over all orderings that respect the partition.
// Suitable for n <= 10.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using AdjRows = std::vector<std::uint32_t>;

std::uint64_t code_for(const AdjRows& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
  }
  return code;
}

std::vector<std::vector<int>> refined_cells(const AdjRows& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> signature(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colour[v]};
      std::vector<int> nbr;
      for (int w = 0; w < n; ++w) {
        if ((adj[v] >> w) & 1u) nbr.push_back(colour[w]);
      }
      std::sort(nbr.begin(), nbr.end());
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      signature[v] = {sig, v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [sig, v] : signature) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colour[v] = ids[signature[v].first];
    if (next == classes) break;
    classes = next;
  }
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

std::uint64_t canonical_code(const AdjRows& adj) {
  auto cells = refined_cells(adj);
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over the permutations of every cell.
  for (;;) {
    std::vector<int> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    const std::uint64_t code = code_for(adj, order);
    if (first || code > best) {
      best = code;
      first = false;
    }
    std::size_t k = 0;
    while (k < cells.size() && !std::next_permutation(cells[k].begin(), cells[k].end())) ++k;
    if (k == cells.size()) break;
  }
  return best;
}

AdjRows decode(std::uint64_t code, int n) {
  AdjRows adj(n, 0);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1u) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  return adj;
}

bool connected(const AdjRows& adj) {
  const int n = static_cast<int>(adj.size());
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1u) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

std::string graph6(const AdjRows& adj) {
  const int n = static_cast<int>(adj.size());
  std::string out(1, static_cast<char>(n + 63));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | static_cast<int>((adj[i] >> j) & 1u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate graphs up to isomorphism (graph6 output)"};
  int max_order = 8;
  int min_order = 2;
  bool include_disconnected = false;
  std::string out_dir = ".";
  app.add_option("--max-order", max_order)->check(CLI::Range(1, 10));
  app.add_option("--min-order", min_order)->check(CLI::Range(1, 10));
  app.add_flag("--all", include_disconnected, "Also emit disconnected graphs");
  app.add_option("--out", out_dir, "Directory for connected_n<k>.g6 files");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  std::set<std::uint64_t> level{0};  // the single graph on one vertex
  for (int n = 1; n <= max_order; ++n) {
    if (n > 1) {
      std::set<std::uint64_t> next;
      for (std::uint64_t code : level) {
        const AdjRows base = decode(code, n - 1);
        for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
          AdjRows adj = base;
          adj.push_back(nbrs);
          for (int v = 0; v < n - 1; ++v) {
            if ((nbrs >> v) & 1u) adj[v] |= 1u << (n - 1);
          }
          next.insert(canonical_code(adj));
        }
      }
      level = std::move(next);
    }
    if (n < min_order) continue;
    const std::string name = include_disconnected ? "all_n" : "connected_n";
    std::ofstream out(std::filesystem::path(out_dir) / (name + std::to_string(n) + ".g6"));
    std::size_t written = 0;
    for (std::uint64_t code : level) {
      const AdjRows adj = decode(code, n);
      if (include_disconnected || connected(adj)) {
        out << graph6(adj) << '\n';
        ++written;
      }
    }
    std::cout << "n=" << n << ": " << written << " graphs\n";
  }
  return 0;
}
