#pragma once

#include <stdexcept>
#include <string>

namespace foxcolor {

enum class ErrorCode {
  MalformedToken,
  DanglingEdge,
  EmptyInput,
  AnchorNotFound,
  MoveNotApplicable,
  MissingColor,
  BudgetExceeded,
  NonPrime,
  ModulusTooSmall,
  TrivialColoring,
  SearchExhausted,
  GuardViolated,
  NotFound,
  InvalidInput,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::AnchorNotFound: return "AnchorNotFound";
    case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorCode::MissingColor: return "MissingColor";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::TrivialColoring: return "TrivialColoring";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace foxcolor
