#ifndef NODALVAR_ERRORS_HPP
#define NODALVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nodalvar {

enum class ErrorCode {
  InvalidConfiguration,
  UnsupportedState,
  DegenerateFunction,
  InsufficientResolution,
  NumericFailure,
  DegeneratePatch,
  InvalidSubset,
  DisallowedScaling,
  DegenerateScaling,
  InvalidPartition,
  DegenerateNode,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

/// Exit-code mapping used by the CLI: 1 = configuration/validation,
/// 2 = numeric trouble.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfiguration:
    case ErrorCode::UnsupportedState:
    case ErrorCode::InsufficientResolution:
    case ErrorCode::InvalidSubset:
    case ErrorCode::DisallowedScaling:
    case ErrorCode::InvalidPartition:
      return 1;
    default:
      return 2;
  }
}

}  // namespace nodalvar

#endif
