#pragma once

#include <iosfwd>

namespace domgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `domgraph` executable. Returns 0 on success, 1 when a
/// bound check or verification fails and 2 for usage or input errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace domgraph::cli
