#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

enum class ErrorKind {
  kZeroVector,
  kInvalidDimension,
  kEmptyDirectionSet,
  kDimensionMismatch,
  kOverflow,
  kEmptySet,
  kEmptyMatroid,
  kInvalidMatroid,
  kInfeasibleFlow,
  kInfeasible,
  kUnbounded,
  kBudgetExceeded,
  kInvalidEdgeBound,
  kInvalidRank,
  kInconsistentLineSums,
  kInvalidDemand,
  kUnbalancedDemand,
  kInvalidArgument,
  kParse,
  kMissingObjective,
  kTooLargeForBruteforce,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kInvalidDimension: return "InvalidDimension";
    case ErrorKind::kEmptyDirectionSet: return "EmptyDirectionSet";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kEmptyMatroid: return "EmptyMatroid";
    case ErrorKind::kInvalidMatroid: return "InvalidMatroid";
    case ErrorKind::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kUnbounded: return "UnboundedAfterPresolve";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kInvalidEdgeBound: return "InvalidEdgeBound";
    case ErrorKind::kInvalidRank: return "InvalidRank";
    case ErrorKind::kInconsistentLineSums: return "InconsistentLineSums";
    case ErrorKind::kInvalidDemand: return "InvalidDemand";
    case ErrorKind::kUnbalancedDemand: return "UnbalancedDemand";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kMissingObjective: return "MissingObjective";
    case ErrorKind::kTooLargeForBruteforce: return "TooLargeForBruteforce";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ccm
