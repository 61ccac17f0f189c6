#include "mlsa/error.hpp"

namespace mlsa {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidInstance: return "InvalidInstance";
    case ErrorKind::kInfeasible: return "InfeasiblePacking";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::kKBoundExceeded: return "KBoundExceeded";
    case ErrorKind::kOverlap: return "OverlapDetected";
    case ErrorKind::kStaleImprovement: return "StaleImprovement";
    case ErrorKind::kIterationGuard: return "IterationGuardTripped";
    case ErrorKind::kGenerationTimeout: return "GenerationTimeout";
  }
  return "Error";
}

}  // namespace mlsa
