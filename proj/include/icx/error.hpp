#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icx {

enum class ErrorKind {
  empty_range,
  insufficient_table,
  undefined_argument,
  excluded_case,
  invalid_argument,
  arity,
  rank_exhausted,
  classification_conflict,
  corrupt_cache,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace icx
