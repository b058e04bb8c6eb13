#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domgraph {

enum class ErrorKind {
  MalformedLine,
  SelfLoop,
  VertexOutOfRange,
  Disconnected,
  OrderTooSmall,
  InvalidGraph6,
  TooLarge,
  NotAGammaSet,
  BadR,
  UnknownBound,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace domgraph
