#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgbs {

enum class ErrorKind {
  InvalidParameter,
  Io,
  Format,
  EmptyResult,
  NoSignal,
  Numeric,
  EmptySeed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception tagged with an ErrorKind; what() starts with the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::InvalidParameter, message);
}

}  // namespace tgbs
