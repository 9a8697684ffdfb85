#include "deltak/error.hpp"

namespace deltak {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_coloring: return "invalid-colouring";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::infeasible: return "infeasible";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace deltak
