#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domgraph/bounds.hpp"
#include "domgraph/error.hpp"
#include "domgraph/graph_io.hpp"
#include "domgraph/harness.hpp"
#include "domgraph/report_json.hpp"
#include "domgraph/treelift.hpp"

namespace domgraph::cli {

namespace {

struct Options {
  std::string format = "graph6";
  std::vector<int> r_values{3, 4, 5};
  int max_enum = kDefaultMaxEnumerationOrder;
  std::string jsonl;
  bool strict = false;
  unsigned jobs = 1;
  bool check_lift = false;

  std::string input;
  std::string bound;
  std::vector<int> set;
};

std::string set_string(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// A path to a file, "-" for standard input, or (graph6 only) the encoding itself.
Graph load_graph(const std::string& arg, GraphFormat format) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return format == GraphFormat::Graph6 ? parse_graph6(buf.str()) : parse_edgelist(buf.str());
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_graph_file(arg, format);
  if (format == GraphFormat::Graph6) return parse_graph6(arg);
  throw Error(ErrorKind::IoError, "cannot open '" + arg + "'");
}

ReportConfig report_config(const Options& opt) {
  ReportConfig config;
  config.r_values = opt.r_values;
  validate(config);
  return config;
}

CorpusConfig corpus_config(const Options& opt) {
  CorpusConfig config;
  config.format = parse_format(opt.format);
  config.report = report_config(opt);
  config.strict = opt.strict;
  config.jobs = opt.jobs;
  config.check_lift = opt.check_lift;
  config.max_enumeration_order = opt.max_enum;
  return config;
}

/// Opens the --jsonl target; "-" means the regular output stream.
class JsonlSink {
 public:
  JsonlSink(const std::string& path, std::ostream& out) {
    if (path.empty()) return;
    if (path == "-") {
      stream_ = &out;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream* get() { return stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string status_of(const BoundCheck& c) {
  if (c.skipped) return "skipped";
  if (!c.holds) return "VIOLATED";
  return c.equality ? "equality" : "strict";
}

void print_report(std::ostream& out, const Graph& g, const BoundReport& report) {
  out << "graph       " << (g.order() <= 62 ? to_graph6(g) : std::string("-")) << "  (n=" << report.order
      << ", m=" << report.size << ")\n";
  out << "gamma       " << report.gamma << "  gamma-set " << set_string(report.gamma_set) << '\n';
  out << "diameter    " << report.diameter << "  wiener " << report.wiener << "  boundary "
      << set_string(report.boundary.boundary) << "  ecc(B) " << report.boundary.ecc_of_boundary << "\n\n";

  out << std::left << std::setw(18) << "bound" << std::setw(10) << "value" << std::setw(10) << "slack"
      << std::setw(10) << "status" << "witness\n";
  for (const BoundCheck* c : report.checks()) {
    out << std::setw(18) << bound_name(*c);
    if (c->skipped) {
      out << std::setw(10) << "-" << std::setw(10) << "-" << std::setw(10) << "skipped" << '(' << c->skip_reason
          << ")\n";
      continue;
    }
    out << std::setw(10) << c->value.to_string() << std::setw(10) << c->slack.to_string() << std::setw(10)
        << status_of(*c) << (c->witness.empty() ? std::string("-") : set_string(c->witness));
    if (c->kind == BoundKind::RSubset && !c->exhaustive) out << " (sampled)";
    out << '\n';
  }
  if (const auto& spade = report.boundary_ecc_check.spade) {
    out << "\nboundary diagnostic  d(" << spade->x << ',' << spade->y << ")+d(" << spade->x << ',' << spade->z
        << ")+d(" << spade->y << ',' << spade->z << ") = " << spade->sum << " >= 3R+1 = " << spade->rhs << '\n';
  }
  out << "triple equalities    " << report.triple_equalities.size() << '\n';
  for (const auto& eq : report.triple_equalities) {
    out << "  " << set_string(eq.triple) << " distances (" << eq.distances[0] << ',' << eq.distances[1] << ','
        << eq.distances[2] << ") " << (eq.consistent ? "all 2 mod 3" : "MOD-3 CONTRADICTION") << '\n';
  }
  for (const auto& f : report.failures) out << "FAILURE: " << f << '\n';
}

int run_analyze(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input, parse_format(opt.format));
  const BoundReport report = assemble_report(g, report_config(opt));
  print_report(out, g, report);
  JsonlSink sink(opt.jsonl, out);
  if (auto* s = sink.get()) {
    *s << to_jsonl_line(report_to_json(report, 1, g.order() <= 62 ? to_graph6(g) : "")) << '\n';
  }
  return report.fatal ? kExitViolation : kExitOk;
}

int run_verify(const Options& opt, std::ostream& out) {
  const CorpusConfig config = corpus_config(opt);
  JsonlSink sink(opt.jsonl, out);
  const CorpusSummary summary = run_corpus_verify(opt.input, config, sink.get());
  std::ostream& text = sink.get() == &out ? std::cerr : out;
  text << "processed   " << summary.graphs_processed << '\n';
  text << "skipped     " << summary.skipped.size() << '\n';
  for (const auto& s : summary.skipped) text << "  line " << s.line << ": " << s.message << '\n';
  text << "violations  " << summary.violations << '\n';
  text << "equalities ";
  for (const auto& [name, count] : summary.equality_counts) text << ' ' << name << '=' << count;
  text << '\n';
  text << "elapsed     " << std::fixed << std::setprecision(3) << summary.elapsed_seconds << "s\n";
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int run_tight(const Options& opt, std::ostream& out) {
  for (const auto& encoding : find_tight_instances(opt.input, opt.bound, corpus_config(opt))) {
    out << encoding << '\n';
  }
  return kExitOk;
}

int run_lift(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.input, parse_format(opt.format));
  const VertexSet m = opt.set.empty() ? gamma_exact(g).witness : VertexSet(opt.set);
  const SpanningTreeLift lift = lift_gamma_set_to_spanning_tree(g, m);
  const LiftVerification check = verify_lift(g, lift, m, opt.max_enum);

  out << "set         " << set_string(m) << "  (size " << m.size() << ")\n";
  out << "dominators ";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (lift.dominator_of[v] >= 0) out << ' ' << v << "->" << lift.dominator_of[v];
  }
  out << "\nconnectors ";
  for (const Edge& e : lift.connector_edges) out << " (" << e.u << ',' << e.v << ')';
  out << "\ntree edges ";
  for (const Edge& e : lift.tree_edges) out << " (" << e.u << ',' << e.v << ')';
  out << "\nverify      " << (check.ok ? "ok" : "FAILED: " + std::string(to_string(check.reason))) << '\n';
  return check.ok ? kExitOk : kExitViolation;
}

int run_counterexample(std::ostream& out) {
  const CounterexampleReport rep = fodig_counterexample_demo();
  auto label = [&](Vertex v) { return rep.labels.at(v); };
  out << "edges      ";
  for (const Edge& e : rep.graph.edges()) out << ' ' << label(e.u) << '-' << label(e.v);
  out << "\ngamma       " << rep.gamma << "  gamma-set {" << label(rep.gamma_set[0]) << ", "
      << label(rep.gamma_set[1]) << "} " << (rep.gamma_set_is_minimum ? "(minimum dominating)" : "(NOT a gamma-set)")
      << '\n';
  out << "diameter    " << rep.diameter << '\n';
  out << "path       ";
  for (Vertex v : rep.diametral_path) out << ' ' << label(v);
  out << "  (" << (rep.path_induced ? "induced" : "NOT induced") << ", length " << rep.diametral_path.size() - 1
      << ")\n";
  out << "joining    ";
  for (const Edge& e : rep.joining_edges) out << ' ' << label(e.u) << '-' << label(e.v);
  out << "  (" << rep.joining_edge_count << " edges between N[u] and N[v])\n";
  out << "claim       at most gamma-1 = " << rep.fodig_claim_bound << " joining edges\n";
  out << "verdict     " << (rep.all_properties_hold() ? "claim refuted" : "CONSTRUCTION FAILED") << '\n';
  return rep.all_properties_hold() ? kExitOk : kExitViolation;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domination numbers and distance lower bounds for small graphs", "domgraph"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--max-enum", opt.max_enum, "Order cap for exhaustive enumeration")
        ->check(CLI::Range(1, kMaxOrder));
  };
  auto add_report_options = [&](CLI::App* sub) {
    sub->add_option("--r", opt.r_values, "Subset sizes for the r-subset bound")->delimiter(',');
    sub->add_option("--jsonl", opt.jsonl, "Write JSONL records to this file ('-' for stdout)");
  };
  auto add_corpus_options = [&](CLI::App* sub) {
    sub->add_flag("--strict", opt.strict, "Abort on malformed or disconnected input");
    sub->add_option("--jobs,-j", opt.jobs, "Worker threads (0 = all cores)");
    sub->add_flag("--check-lift", opt.check_lift, "Also verify the spanning-tree lift of each witness");
  };

  auto* analyze = app.add_subcommand("analyze", "Full bound report for one graph");
  analyze->add_option("graph", opt.input, "Graph file, '-' for stdin, or a graph6 string")->required();
  add_graph_options(analyze);
  add_report_options(analyze);

  auto* verify = app.add_subcommand("verify", "Check every bound over a corpus");
  verify->add_option("corpus", opt.input, "Corpus file")->required();
  add_graph_options(verify);
  add_report_options(verify);
  add_corpus_options(verify);

  auto* tight = app.add_subcommand("tight", "List corpus graphs attaining equality for one bound");
  tight->add_option("corpus", opt.input, "Corpus file")->required();
  tight->add_option("--bound", opt.bound, "diameter | triple | r-subset(<r>) | average-distance | boundary-ecc")
      ->required();
  add_graph_options(tight);
  add_report_options(tight);
  add_corpus_options(tight);

  auto* lift = app.add_subcommand("lift", "Lift a gamma-set to a spanning tree that keeps it minimum");
  lift->add_option("graph", opt.input, "Graph file, '-' for stdin, or a graph6 string")->required();
  lift->add_option("--set", opt.set, "Comma-separated gamma-set (default: solver witness)")->delimiter(',');
  add_graph_options(lift);

  auto* counterexample = app.add_subcommand("counterexample", "Rebuild the diametral-path counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt, out);
    if (verify->parsed()) return run_verify(opt, out);
    if (tight->parsed()) return run_tight(opt, out);
    if (lift->parsed()) return run_lift(opt, out);
    if (counterexample->parsed()) return run_counterexample(out);
  } catch (const Error& e) {
    err << "domgraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "domgraph: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace domgraph::cli
