#include "domgraph/error.hpp"

namespace domgraph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::InvalidGraph6: return "InvalidGraph6";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAGammaSet: return "NotAGammaSet";
    case ErrorKind::BadR: return "BadR";
    case ErrorKind::UnknownBound: return "UnknownBound";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace domgraph
