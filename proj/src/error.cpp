#include "tgbs/error.hpp"

namespace tgbs {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::Format: return "format-error";
    case ErrorKind::EmptyResult: return "empty-result";
    case ErrorKind::NoSignal: return "no-signal";
    case ErrorKind::Numeric: return "numeric-error";
    case ErrorKind::EmptySeed: return "empty-seed";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tgbs
