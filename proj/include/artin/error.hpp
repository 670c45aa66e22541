#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

/// Stable error codes surfaced by every module and by the CLI error record.
enum class ErrorCode {
  kSyntaxError,
  kVariableOutOfRange,
  kCoefficientNotInField,
  kFieldMismatch,
  kNvarsMismatch,
  kNonInvertibleMap,
  kInvalidArgument,
  kNotArtinian,
  kResidueNotPower,
  kFieldExtensionRequired,
  kNotStretched,
  kNotAlmostStretched,
  kNotGorenstein,
  kNotApplicable,
  kSearchExhausted,
  kWrongHilbertFunction,
  kInadmissibleHilbertFunction,
  kNonMinimalGenerators,
  kGcdNotOne,
  kUnknownSuite,
  kIo,
  kInternal,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kVariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::kCoefficientNotInField: return "CoefficientNotInField";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNvarsMismatch: return "NvarsMismatch";
    case ErrorCode::kNonInvertibleMap: return "NonInvertibleMap";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotArtinian: return "NotArtinian";
    case ErrorCode::kResidueNotPower: return "ResidueNotPower";
    case ErrorCode::kFieldExtensionRequired: return "FieldExtensionRequired";
    case ErrorCode::kNotStretched: return "NotStretched";
    case ErrorCode::kNotAlmostStretched: return "NotAlmostStretched";
    case ErrorCode::kNotGorenstein: return "NotGorenstein";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kWrongHilbertFunction: return "WrongHilbertFunction";
    case ErrorCode::kInadmissibleHilbertFunction: return "InadmissibleHilbertFunction";
    case ErrorCode::kNonMinimalGenerators: return "NonMinimalGenerators";
    case ErrorCode::kGcdNotOne: return "GcdNotOne";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace artin
