#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brim {

enum class ErrorCode {
  InvalidArgument,
  ArityMismatch,
  KindMismatch,
  Syntax,
  UnknownVariable,
  DegreeCap,
  PowerCap,
  SizeCap,
  ZeroIdeal,
  NotMPrimary,
  NonFinite,
  NonMonomial,
  NoStabilization,
  GenericityFailure,
  InvolutionFailure,
  ChainCap,
  ContainmentViolated,
  NotIntegrallyClosed,
  Degenerate,
  AreaMismatch,
  PreconditionFailed,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace brim
