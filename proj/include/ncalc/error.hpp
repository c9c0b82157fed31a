#pragma once

#include <stdexcept>
#include <string>

namespace ncalc {

enum class ErrorKind {
  MalformedSpec,
  NonAssociative,
  BadUnit,
  AlgebraMismatch,
  NotDivisionAlgebra,
  SingularElement,
  PseudoNorm,
  NonPositiveFactor,
  UnknownBasisMap,
  ArityMismatch,
  UnsupportedSlotMap,
  NotSkew,
  TooLarge,
  DeficientFamily,
  NonFinite,
  NotIntegrable,
  NoConvergence,
  NotCertified,
  NotClosed,
  OutOfDomain,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncalc
