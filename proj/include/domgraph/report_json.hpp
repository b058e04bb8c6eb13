#pragma once

#include <string>
#include <string_view>

#include "domgraph/bounds.hpp"
#include "json.hpp"

namespace domgraph {

/// One JSONL record for a graph. Keys are emitted in a fixed order and every
/// rational is written as {"num", "den"}, so identical reports serialise to
/// identical bytes.
nlohmann::ordered_json report_to_json(const BoundReport& report, std::size_t index, std::string_view encoding);

nlohmann::ordered_json check_to_json(const BoundCheck& check);

/// Compact single-line dump.
std::string to_jsonl_line(const nlohmann::ordered_json& record);

}  // namespace domgraph
