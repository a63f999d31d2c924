#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace explab {

enum class ErrorCode {
  NonPrime,
  FieldTooLarge,
  LengthMismatch,
  SelfLoop,
  DuplicateEdge,
  OutOfRange,
  NotRegular,
  BadParameters,
  GivesUp,
  NotSymmetric,
  NoConvergence,
  CheckFailed,
  DegenerateParams,
  HypothesisViolated,
  TooLarge,
  EmptyRange,
  EmptySubcode,
  CounterexampleFound,
  InternalMismatch,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::GivesUp: return "GivesUp";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::EmptySubcode: return "EmptySubcode";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace detail
}  // namespace explab
