#include "intcheb/error.hpp"

namespace intcheb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::ValueNotAboveT: return "ValueNotAboveT";
    case ErrorKind::MissingTranslateClosure: return "MissingTranslateClosure";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::NoMonicVector: return "NoMonicVector";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::UnboundedBelow: return "UnboundedBelow";
    case ErrorKind::ResultantFailed: return "ResultantFailed";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::StrictMaxUndecided: return "StrictMaxUndecided";
    case ErrorKind::SupExceedsM: return "SupExceedsM";
    case ErrorKind::ContainsInteger: return "ContainsInteger";
    case ErrorKind::ReducibleOrComplex: return "ReducibleOrComplex";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::MonicInput: return "MonicInput";
    case ErrorKind::QNotDividingR: return "QNotDividingR";
    case ErrorKind::RootsEscapeI: return "RootsEscapeI";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::MultipleCandidates: return "MultipleCandidates";
  }
  return "Unknown";
}

}  // namespace intcheb
