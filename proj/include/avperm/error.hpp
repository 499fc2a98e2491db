#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avperm {

enum class ErrorCode {
  EmptyInput,
  Duplicate,
  ValueOutOfRange,
  Syntax,
  InvalidClass,        // an input that must avoid 213 and 231 does not
  ClassViolation,      // bivincular bottom row does not avoid 213 and 231
  StructureViolation,  // bivincular value-adjacency layout is impossible
  SizeGuard,           // brute-force oracle called above its size limits
  IndexOutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace avperm
