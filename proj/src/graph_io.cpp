#include "domgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "domgraph/error.hpp"

namespace domgraph {

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxShortOrder = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

bool parse_int(std::string_view token, long long& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string line_ref(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(GraphFormat format) noexcept {
  return format == GraphFormat::Graph6 ? "graph6" : "edgelist";
}

Graph parse_edgelist(std::string_view text) {
  long long order = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (order < 0) {
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], order)) {
        throw Error(ErrorKind::MalformedLine,
                    line_ref(line_no) + "expected header 'n <count>', got '" + std::string(line) + "'");
      }
      if (order < 2) {
        throw Error(ErrorKind::OrderTooSmall, "declared order " + std::to_string(order) + " is below 2");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw Error(ErrorKind::MalformedLine,
                  line_ref(line_no) + "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorKind::VertexOutOfRange, line_ref(line_no) + "vertex label outside 0.." +
                                                   std::to_string(order - 1));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, line_ref(line_no) + "self-loop at " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (order < 0) throw Error(ErrorKind::MalformedLine, "missing 'n <count>' header");
  if (order > kMaxOrder) {
    throw Error(ErrorKind::TooLarge, "declared order " + std::to_string(order) + " exceeds " +
                                         std::to_string(kMaxOrder));
  }
  return Graph::from_edges(static_cast<int>(order), edges);
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorKind::InvalidGraph6, "empty graph6 string");
  for (char c : line) {
    if (c < kGraph6Offset || c > 126) {
      throw Error(ErrorKind::InvalidGraph6, "character '" + std::string(1, c) + "' outside graph6 range");
    }
  }
  const int order = line[0] - kGraph6Offset;
  if (order > kGraph6MaxShortOrder) {
    throw Error(ErrorKind::InvalidGraph6, "long-form graph6 header is not supported");
  }
  const std::size_t bits = static_cast<std::size_t>(order) * (order > 0 ? order - 1 : 0) / 2;
  const std::size_t chunks = (bits + 5) / 6;
  if (line.size() != 1 + chunks) {
    throw Error(ErrorKind::InvalidGraph6, "expected " + std::to_string(1 + chunks) +
                                              " characters for order " + std::to_string(order) +
                                              ", got " + std::to_string(line.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = line[1 + k / 6] - kGraph6Offset;
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < chunks * 6; ++k) {
    const int chunk = line[1 + k / 6] - kGraph6Offset;
    if ((chunk >> (5 - k % 6)) & 1) throw Error(ErrorKind::InvalidGraph6, "nonzero padding bits");
  }
  if (order < 2) {
    throw Error(ErrorKind::OrderTooSmall, "graph order " + std::to_string(order) + " is below 2");
  }
  return Graph::from_edges(order, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxShortOrder) {
    throw Error(ErrorKind::TooLarge, "short-form graph6 holds at most 62 vertices");
  }
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Offset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Offset));
  return out;
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  if (format == GraphFormat::EdgeList) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edgelist(buf.str());
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) return parse_graph6(line);
  }
  throw Error(ErrorKind::InvalidGraph6, "'" + path.string() + "' contains no graph");
}

}  // namespace domgraph
