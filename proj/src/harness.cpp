#include "domgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <regex>
#include <thread>

#include "domgraph/error.hpp"
#include "domgraph/report_json.hpp"
#include "domgraph/treelift.hpp"

namespace domgraph {

namespace {

struct CorpusEntry {
  std::size_t line = 0;
  std::string text;
};

struct ParsedEntry {
  std::size_t line = 0;
  std::string encoding;
  Graph graph;
};

struct Outcome {
  BoundReport report;
  std::optional<LiftVerification> lift;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<CorpusEntry> split_corpus(std::istream& in, GraphFormat format,
                                      std::vector<SkippedInput>& stray) {
  std::vector<CorpusEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (format == GraphFormat::Graph6) {
      entries.push_back({line_no, std::string(body)});
      continue;
    }
    const std::string_view content = trim(body.substr(0, body.find('#')));
    if (content.empty()) continue;
    if (content.starts_with("n ") || content.starts_with("n\t")) {
      entries.push_back({line_no, std::string(content) + "\n"});
    } else if (entries.empty()) {
      stray.push_back({line_no, "edge line before any 'n <count>' header"});
    } else {
      entries.back().text += std::string(content) + "\n";
    }
  }
  return entries;
}

Outcome analyze(const Graph& g, const CorpusConfig& config) {
  Outcome out{assemble_report(g, config.report), std::nullopt};
  if (config.check_lift) {
    const auto lift = lift_gamma_set_to_spanning_tree(g, out.report.gamma_set);
    out.lift = verify_lift(g, lift, out.report.gamma_set, config.max_enumeration_order);
  }
  return out;
}

std::vector<Outcome> analyze_all(const std::vector<ParsedEntry>& parsed, const CorpusConfig& config) {
  std::vector<std::optional<Outcome>> slots(parsed.size());
  unsigned jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(parsed.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < parsed.size(); i = next++) {
      try {
        slots[i] = analyze(parsed[i].graph, config);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Outcome> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

CorpusSummary verify_corpus(std::istream& in, const CorpusConfig& config, std::ostream* jsonl) {
  validate(config.report);
  const auto start = std::chrono::steady_clock::now();
  CorpusSummary summary;

  const auto entries = split_corpus(in, config.format, summary.skipped);
  if (config.strict && !summary.skipped.empty()) {
    throw Error(ErrorKind::MalformedLine,
                "line " + std::to_string(summary.skipped.front().line) + ": " + summary.skipped.front().message);
  }

  std::vector<ParsedEntry> parsed;
  parsed.reserve(entries.size());
  for (const auto& entry : entries) {
    try {
      Graph g = config.format == GraphFormat::Graph6 ? parse_graph6(entry.text) : parse_edgelist(entry.text);
      std::string encoding = config.format == GraphFormat::Graph6 ? entry.text : to_graph6(g);
      parsed.push_back({entry.line, std::move(encoding), std::move(g)});
    } catch (const Error& e) {
      if (config.strict) throw Error(e.kind(), "line " + std::to_string(entry.line) + ": " + e.what());
      summary.skipped.push_back({entry.line, e.what()});
    }
  }
  std::sort(summary.skipped.begin(), summary.skipped.end(),
            [](const SkippedInput& a, const SkippedInput& b) { return a.line < b.line; });

  const auto outcomes = analyze_all(parsed, config);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const Outcome& outcome = outcomes[i];
    const BoundReport& report = outcome.report;
    ++summary.graphs_processed;
    const bool lift_failed = outcome.lift && !outcome.lift->ok;
    if (report.fatal || lift_failed) ++summary.violations;
    for (const BoundCheck* c : report.checks()) {
      if (c->skipped || !c->equality) continue;
      const std::string name = bound_name(*c);
      ++summary.equality_counts[name];
      summary.tight_instances.push_back({parsed[i].encoding, name});
    }
    if (jsonl != nullptr) {
      auto record = report_to_json(report, parsed[i].line, parsed[i].encoding);
      if (outcome.lift) {
        nlohmann::ordered_json lift;
        lift["ok"] = outcome.lift->ok;
        lift["reason"] = std::string(to_string(outcome.lift->reason));
        record["lift"] = std::move(lift);
      }
      *jsonl << to_jsonl_line(record) << '\n';
    }
  }
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

CorpusSummary run_corpus_verify(const std::filesystem::path& path, const CorpusConfig& config,
                                std::ostream* jsonl) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open corpus '" + path.string() + "'");
  return verify_corpus(in, config, jsonl);
}

std::string canonical_bound_name(std::string_view bound) {
  static const std::regex r_subset(R"(r-subset\((\d+)\))");
  if (bound == "diameter" || bound == "triple" || bound == "average-distance" || bound == "boundary-ecc") {
    return std::string(bound);
  }
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_match(bound.begin(), bound.end(), m, r_subset)) {
    const int r = std::stoi(m[1].str());
    if (r < 3) throw Error(ErrorKind::BadR, "r = " + std::to_string(r) + " is below 3");
    return "r-subset(" + std::to_string(r) + ")";
  }
  throw Error(ErrorKind::UnknownBound, "unknown bound '" + std::string(bound) +
                                           "' (expected diameter, triple, r-subset(<r>), average-distance "
                                           "or boundary-ecc)");
}

std::vector<std::string> find_tight_instances(std::istream& in, std::string_view bound,
                                              const CorpusConfig& config) {
  const std::string name = canonical_bound_name(bound);
  CorpusConfig effective = config;
  if (name.starts_with("r-subset")) {
    const int r = std::stoi(name.substr(9));
    auto& rs = effective.report.r_values;
    if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
  }
  const CorpusSummary summary = verify_corpus(in, effective);
  std::vector<std::string> out;
  for (const auto& t : summary.tight_instances) {
    if (t.bound == name) out.push_back(t.encoding);
  }
  return out;
}

std::vector<std::string> find_tight_instances(const std::filesystem::path& path, std::string_view bound,
                                              const CorpusConfig& config) {
  canonical_bound_name(bound);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open corpus '" + path.string() + "'");
  return find_tight_instances(in, bound, config);
}

}  // namespace domgraph
