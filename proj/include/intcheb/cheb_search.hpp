#pragma once

// Candidate factors by LLL under the interval inner product, weights by
// linear programming, and exact certification of sup |P|^(1/deg P) = m.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intcheb/lll.hpp"
#include "intcheb/obstruction.hpp"
#include "intcheb/real_roots.hpp"
#include "intcheb/relations.hpp"

namespace intcheb {

struct WeightedFactor {
  IntPoly poly;
  Rational alpha;
};

/// F(x) = sum (alpha_i / deg f_i) log|f_i(x)|, the log of the normalized
/// product. Certification requires monic irreducible factors with
/// nonnegative weights summing to 1; the evaluation helpers accept any
/// nonconstant factors.
struct WeightedProduct {
  std::vector<WeightedFactor> factors;

  /// alpha_i = e_i deg f_i / sum_j e_j deg f_j
  static WeightedProduct from_exponents(const std::vector<std::pair<IntPoly, Integer>>& powers);

  Rational weight(std::size_t i) const { return factors[i].alpha / factors[i].poly.degree(); }
  /// Throws InvalidInput unless the certification invariants hold.
  void validate() const;
  /// Drops zero weights.
  WeightedProduct support() const;
  /// P(1 - x) up to sign / P(x - k): factors re-monicized, weights kept.
  WeightedProduct reflected() const;
  WeightedProduct translated(const Integer& k) const;
};

/// Outward enclosure of F over the enclosure x.
Enclosure log_potential(const WeightedProduct& p, const Enclosure& x);

struct CertificateRecord {
  std::vector<Integer> resultants;
  /// Critical points other than the roots of Q, with the certified bound on
  /// F(x) - log m at each; endpoints likewise.
  std::vector<std::pair<RatInterval, double>> critical_margins;
  std::vector<std::pair<Rational, double>> endpoint_margins;
  std::vector<Relation> relations;
  /// Polynomials from CertifyOptions::also_attaining, primitive.
  std::vector<IntPoly> also_attaining;
  mpfr_prec_t max_precision = 0;
  /// "identity" for direct certification, "reflect" / "translate k" when
  /// inherited.
  std::string derivation = "identity";
};

struct CertifiedProduct {
  WeightedProduct product;
  RatInterval interval;
  IntPoly q;
  ObstructionValue sup_value;
  CertificateRecord certificate;

  CertifiedProduct reflected() const;
  CertifiedProduct translated(const Integer& k) const;
};

/// Entry (i,j) = int_I x^(i+j) dx, plus 1 at (k,k).
RatMatrix gram_matrix(const RatInterval& I, int k);

struct CandidateSet {
  std::vector<IntPoly> factors;
  /// Degrees k whose reduced basis held no vector with unit lead.
  std::vector<int> no_monic_degrees;
};
/// LLL-reduced monomial bases for k = 1..k_max, their unit-lead vectors and
/// the unit-lead {-1,0,1} combinations of the reduced vectors whose norm is
/// at most twice the least such norm; all factored into monic irreducibles.
CandidateSet lll_candidates(const RatInterval& I, int k_max);

/// Keeps the f with |Res(f, Q)| = 1.
std::vector<IntPoly> filter_factors(const std::vector<IntPoly>& candidates, const IntPoly& q);

struct WeightOptions {
  int samples_per_factor = 500;
  double guard_band = 1e-6;
  long max_denominator = 1000000;
  double equality_tolerance = 1e-12;
  std::vector<Relation> relations;
};
struct WeightResult {
  /// Max of F over the sample points with the rational weights.
  double t = 0;
  std::vector<Rational> alphas;
};
WeightResult optimize_weights(const std::vector<IntPoly>& factors, const RatInterval& I,
                              const std::optional<IntPoly>& q, const WeightOptions& options = {});

/// Best rational approximation with denominator <= max_den.
Rational rationalize(double x, long max_den);

struct CertifyOptions {
  mpfr_prec_t start_precision = 64;
  mpfr_prec_t max_precision = 4096;
  mpfr_prec_t relation_precision = 256;
  /// Further obstruction polynomials of the same value whose roots are also
  /// maxima of F; each passes checks 1, 2 and 4 and is exempt from check 3.
  std::vector<IntPoly> also_attaining;
};

/// Proves sup_I exp(F) = a^(-1/d) for Q = a x^d + ...:
///  1. |Res(f_i, Q)| = 1 for each factor;
///  2. Q divides N = sum c_i f_i' prod_{j != i} f_j with c_i proportional to
///     the weights, so the roots of Q are critical points of F; waived for
///     linear Q whose root is an endpoint of I;
///  3. F < log m strictly at every other critical point in I and at each
///     endpoint that is not a root of Q;
///  4. F = log m at the roots of Q: immediate for d = 1 from check 1; for
///     d >= 2 the vector (1/d, weights) must lie in the span of relations
///     verified exactly in Q[x]/(Q).
CertifiedProduct certify_attainment(const WeightedProduct& product, const RatInterval& I, const IntPoly& q,
                                    const CertifyOptions& options = {});

/// Relations among log a_d and log|f_i(beta)| at one root of Q; flagged
/// exact only when verified in Q[x]/(Q).
std::vector<Relation> relation_basis(const std::vector<IntPoly>& factors, const IntPoly& q, const RootBox& beta,
                                     mpfr_prec_t prec = 256);

/// N(x) with integer c_i = weight_i * common denominator.
IntPoly critical_numerator(const WeightedProduct& p);

/// Certified upper bound for sup_I F: maximum over the critical points of F
/// in I and the endpoints, each box refined to width about 2^(-prec/2).
Enclosure log_sup_bound(const WeightedProduct& p, const RatInterval& I, mpfr_prec_t prec = 128);

/// Pulls each endpoint of `approx` to the nearby crossing of F = log m,
/// keeping the side where F < log m is certified, then rounds inward to
/// `digits` decimals. `approx` endpoints must lie within `window` of the
/// crossings. Certification of the result is left to certify_attainment.
RatInterval refine_endpoints(const WeightedProduct& p, const RatInterval& approx, const ObstructionValue& m,
                             int digits = 12, const Rational& window = Rational(1, 1000), mpfr_prec_t prec = 256);

}  // namespace intcheb
