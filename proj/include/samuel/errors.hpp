#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace samuel {

enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  MixedRings,
  SyntaxError,
  UnknownVariable,
  ZeroPolynomial,
  ZeroDivisorRequest,
  ResourceLimit,
  NotLocallyFinite,
  NotFinite,
  NoPolynomialTail,
  NonIntegerCoefficient,
  SamplingExhausted,
  BoundViolation,
  InvalidInput,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDivisorRequest: return "ZeroDivisorRequest";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NoPolynomialTail: return "NoPolynomialTail";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace samuel
