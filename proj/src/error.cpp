#include "icx/error.hpp"

namespace icx {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::empty_range: return "empty-range";
    case ErrorKind::insufficient_table: return "insufficient-table";
    case ErrorKind::undefined_argument: return "undefined-argument";
    case ErrorKind::excluded_case: return "excluded-case";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::arity: return "arity";
    case ErrorKind::rank_exhausted: return "rank-exhausted";
    case ErrorKind::classification_conflict: return "classification-conflict";
    case ErrorKind::corrupt_cache: return "corrupt-cache";
  }
  return "unknown";
}

}  // namespace icx
