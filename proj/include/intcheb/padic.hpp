#pragma once

// Valuation test for attainment of a maximal obstruction, and critical
// polynomial witnesses from products with a small normalized sup norm.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intcheb/cheb_search.hpp"
#include "intcheb/robinson.hpp"

namespace intcheb {

struct ValuationFailure {
  Integer prime;
  /// Coefficient a_{d-i}.
  int index;
  /// e (d - i) / d with e = v_p(a_d).
  Rational required;
  /// nullopt for a zero coefficient (infinite valuation).
  std::optional<long> actual;
};

struct AttainmentVerdict {
  enum class Status { Impossible, Consistent };
  Status status = Status::Consistent;
  bool gcd_failure = false;
  std::vector<ValuationFailure> failures;

  std::string status_name() const { return status == Status::Impossible ? "impossible" : "consistent"; }
};

/// Necessary conditions for a monic integer polynomial to attain a_d^(-1/d):
/// gcd(a_0, a_d) = 1 and v_p(a_{d-i}) >= e (d - i) / d for every p | a_d.
/// "consistent" makes no claim of attainability. Throws MonicInput.
AttainmentVerdict attainment_obstruction(const IntPoly& q);

using FactoredPoly = std::vector<std::pair<IntPoly, Integer>>;

struct CriticalWitness {
  bool critical = false;
  /// Certified upper bound for log of the normalized sup of R on I.
  Enclosure log_sup;
  mpfr_prec_t precision = 0;
};

/// critical when the normalized sup of R on I is certifiably below
/// a_d^(-1/d); inconclusive once the precision cap is reached.
/// Throws QNotDividingR, RootsEscapeI.
CriticalWitness critical_witness(const FactoredPoly& r, const IntPoly& q, const RatInterval& I,
                                 mpfr_prec_t max_precision = 4096);

/// The unique nonmonic irreducible factor of R with all roots in I and
/// obstruction value above the certified sup of R.
/// Throws NoCandidate, MultipleCandidates.
ObstructionRecord identify_maximal_critical(const FactoredPoly& r, const RatInterval& I,
                                            mpfr_prec_t max_precision = 4096);

}  // namespace intcheb
