#pragma once

// Factorization over the integers: squarefree split, factorization modulo a
// small prime, Hensel lifting and subset recombination.

#include <vector>

#include "intcheb/poly.hpp"

namespace intcheb {

struct Factorization {
  /// Signed integer content; content * prod factor^multiplicity == input.
  Integer content;
  /// Irreducible, primitive, positive leading coefficient; sorted by
  /// (degree, coefficients from the lead down), then multiplicity.
  std::vector<SquarefreeFactor> factors;

  IntPoly expand() const;
};

Factorization factor(const IntPoly& p);

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient, unsorted.
std::vector<IntPoly> factor_squarefree(const IntPoly& p);

/// Content 1, positive lead, exactly one irreducible factor of multiplicity 1.
bool is_irreducible(const IntPoly& p);

}  // namespace intcheb
