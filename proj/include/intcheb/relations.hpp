#pragma once

// Multiplicative relations a^n0 * prod f_i(beta)^n_i = +-1 at the roots beta of
// an irreducible Q: lattice search on a log embedding, exact verification in
// Q[x]/(Q).

#include <vector>

#include "intcheb/real_roots.hpp"

namespace intcheb {

struct Relation {
  /// n_0 for the lead coefficient of Q, then n_i for each factor.
  std::vector<Integer> exponents;
  /// Verified exactly in Q[x]/(Q); otherwise only numerically.
  bool exact = false;
};

/// True when a^n0 * prod f_i^n_i = +-1 in Q[x]/(Q), hence at every root of Q.
/// Gives up (false) when the exponents would make the check too large.
bool verify_relation_exact(const std::vector<IntPoly>& factors, const IntPoly& q, const std::vector<Integer>& exponents);

/// Relations among log|a| and log|f_i(beta)| holding at every listed root,
/// found by LLL on a lattice scaled by about 2^(prec/2) and confirmed
/// numerically at twice the precision; each is then tried exactly.
std::vector<Relation> find_relations(const std::vector<IntPoly>& factors, const IntPoly& q,
                                     const std::vector<RootBox>& roots, mpfr_prec_t prec = 256);

/// Whether v lies in the rational span of the rows.
bool in_rational_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v);
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace intcheb
