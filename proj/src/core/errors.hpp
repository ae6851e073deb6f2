#ifndef DESCOMP_CORE_ERRORS_HPP
#define DESCOMP_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace descomp {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Validation,
  Determinism,
  AlphabetMismatch,
  Precondition,
  Hypothesis,
  Mode,
  Domain,
  IllegalDelegation,
  ModelViolation,
  Encoding,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace descomp

#endif
