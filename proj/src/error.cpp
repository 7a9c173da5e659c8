#include "srgta/error.hpp"

namespace srgta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::TrivialField: return "TrivialField";
    case ErrorKind::InconsistentParams: return "InconsistentParams";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSrg: return "NotSrg";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::ParamRange: return "ParamRange";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CellNotInvariant: return "CellNotInvariant";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotPartitionOfIdentity: return "NotPartitionOfIdentity";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::PrimeDisagreement: return "PrimeDisagreement";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::ImprimitiveParams: return "ImprimitiveParams";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace srgta
