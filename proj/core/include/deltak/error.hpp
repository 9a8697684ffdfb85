#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltak {

enum class ErrorKind {
  invalid_parameter,
  invalid_coloring,
  invalid_input,
  size_limit,
  infeasible,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace deltak
