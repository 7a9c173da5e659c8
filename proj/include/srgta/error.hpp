#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srgta {

enum class ErrorKind {
  NotPrime,
  NotPrimePower,
  DegreeZero,
  SizeGuardExceeded,
  TrivialField,
  InconsistentParams,
  DiscriminantMismatch,
  DivisionByZero,
  NotSrg,
  VertexOutOfRange,
  ParseError,
  LoopRejected,
  ParamRange,
  BadCongruence,
  DegreeMismatch,
  CellNotInvariant,
  Timeout,
  NotAnAutomorphism,
  DimMismatch,
  ClosureBudgetExceeded,
  NotIdempotent,
  NotPartitionOfIdentity,
  OracleMismatch,
  PrimeDisagreement,
  NotTransitive,
  InternalDisagreement,
  ImprimitiveParams,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace srgta
