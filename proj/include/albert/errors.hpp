#pragma once

#include <stdexcept>
#include <string>

namespace albert {

// Error categories. Construction/config problems map to CLI exit code 2;
// suite failures are reported data, never exceptions.
enum class ErrorCode {
  UnsupportedCharacteristic,
  ConstructionError,
  CannotDouble,
  DegenerateParameter,
  AlgebraMismatch,
  ShapeError,
  NotInvertible,
  NotDegreeThree,
  InvalidAutomorphism,
  InternalConsistency,
  ParseError,
  EvalError,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace albert
