#pragma once

#include <stdexcept>
#include <string>

namespace torus {

enum class ErrorKind {
  InvalidArgument,
  DegenerateGeometry,
  ChargeZero,
  GridMismatch,
  VelocityZero,
  FamilyMismatch,
  DomainSingularity,
  DomainUnsupported,
  PoleAtC,
  SingularParameter,
  NoRootInBracket,
  ComplexPotential,
  ConvergenceFailure,
  NotConfining,
  EvenSampleCount,
  NoSignChange,
  UnknownParameter,
  Config,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace torus
