#pragma once

#include <stdexcept>
#include <string>

namespace mlsa {

enum class ErrorKind {
  kIo,
  kParse,
  kInvalidInstance,
  kInfeasible,
  kBudgetExceeded,
  kElementOutOfRange,
  kKBoundExceeded,
  kOverlap,
  kStaleImprovement,
  kIterationGuard,
  kGenerationTimeout,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mlsa
