#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wbary {

enum class ErrorCode {
  ParseError,
  NonPositiveWeight,
  NonPositiveRho,
  InconsistentComponents,
  TooManySingularPoints,
  TooManyVertices,
  WeightOutOfRange,
  OutOfScope,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure the library reports carries one of the codes above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wbary
