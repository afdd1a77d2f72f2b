#pragma once

#include <stdexcept>
#include <string>

namespace intcheb {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  ZeroPolynomial,
  ComplexRoots,
  Undecided,
  EmptyRange,
  ValueNotAboveT,
  MissingTranslateClosure,
  NotCertified,
  AlphaOutOfRange,
  NoMonicVector,
  Infeasible,
  UnboundedBelow,
  ResultantFailed,
  NotCritical,
  StrictMaxUndecided,
  SupExceedsM,
  ContainsInteger,
  ReducibleOrComplex,
  NoRoot,
  MonicInput,
  QNotDividingR,
  RootsEscapeI,
  NoCandidate,
  MultipleCandidates,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intcheb
