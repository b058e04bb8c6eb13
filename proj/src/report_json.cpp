#include "domgraph/report_json.hpp"

namespace domgraph {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& q) {
  ordered_json out;
  out["num"] = q.num();
  out["den"] = q.den();
  return out;
}

}  // namespace

ordered_json check_to_json(const BoundCheck& check) {
  ordered_json out;
  out["skipped"] = check.skipped;
  if (check.skipped) {
    out["reason"] = check.skip_reason;
    return out;
  }
  out["value"] = rational_json(check.value);
  out["slack"] = rational_json(check.slack);
  out["holds"] = check.holds;
  out["equality"] = check.equality;
  out["check"] = {check.scaled_gamma, check.scaled_bound};
  out["statistic"] = check.statistic;
  out["witness"] = check.witness;
  if (check.kind == BoundKind::RSubset) out["exhaustive"] = check.exhaustive;
  if (check.spade) {
    ordered_json spade;
    spade["x"] = check.spade->x;
    spade["y"] = check.spade->y;
    spade["z"] = check.spade->z;
    spade["sum"] = check.spade->sum;
    spade["rhs"] = check.spade->rhs;
    spade["holds"] = check.spade->holds;
    out["spade"] = std::move(spade);
  }
  return out;
}

ordered_json report_to_json(const BoundReport& report, std::size_t index, std::string_view encoding) {
  ordered_json out;
  out["index"] = index;
  out["graph"] = std::string(encoding);
  out["n"] = report.order;
  out["m"] = report.size;
  out["gamma"] = report.gamma;
  out["gamma_set"] = report.gamma_set;
  out["diameter"] = report.diameter;
  out["wiener"] = report.wiener;
  out["boundary"] = report.boundary.boundary;
  out["boundary_ecc"] = report.boundary.ecc_of_boundary;

  ordered_json bounds = ordered_json::object();
  for (const BoundCheck* c : report.checks()) bounds[bound_name(*c)] = check_to_json(*c);
  out["bounds"] = std::move(bounds);

  ordered_json triples = ordered_json::array();
  for (const auto& eq : report.triple_equalities) {
    ordered_json t;
    t["triple"] = eq.triple;
    t["distances"] = eq.distances;
    t["mod3_consistent"] = eq.consistent;
    triples.push_back(std::move(t));
  }
  out["triple_equalities"] = std::move(triples);
  out["fatal"] = report.fatal;
  if (report.fatal) out["failures"] = report.failures;
  return out;
}

std::string to_jsonl_line(const ordered_json& record) { return record.dump(); }

}  // namespace domgraph
