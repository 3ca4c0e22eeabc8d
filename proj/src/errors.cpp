#include "torus/errors.hpp"

namespace torus {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::ChargeZero: return "ChargeZero";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::VelocityZero: return "VelocityZero";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::DomainSingularity: return "DomainSingularity";
    case ErrorKind::DomainUnsupported: return "DomainUnsupported";
    case ErrorKind::PoleAtC: return "PoleAtC";
    case ErrorKind::SingularParameter: return "SingularParameter";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::ComplexPotential: return "ComplexPotential";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotConfining: return "NotConfining";
    case ErrorKind::EvenSampleCount: return "EvenSampleCount";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace torus
