#pragma once

// Sturm sequences, real-root counting, isolation and refinement.

#include <vector>

#include "intcheb/enclosure.hpp"
#include "intcheb/poly.hpp"

namespace intcheb {

/// Sturm sequence p, p', -rem(...), ... with each term divided by its
/// positive content (signs preserved).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);
  int variations(const Rational& x) const;
  int variations_pos_inf() const;
  int variations_neg_inf() const;
  /// Distinct roots in the open interval (a, b); a and b must not be roots.
  int count_open(const Rational& a, const Rational& b) const;
  const std::vector<IntPoly>& terms() const { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

/// Distinct real roots of p in the closed interval I (endpoint roots count).
int count_roots_in(const IntPoly& p, const RatInterval& I);
/// Distinct real roots of p.
int count_real_roots(const IntPoly& p);
/// Real roots of p in I counted with multiplicity.
int count_roots_with_multiplicity(const IntPoly& p, const RatInterval& I);
/// True when all deg(p) complex roots are real and lie in I.
bool all_roots_in(const IntPoly& p, const RatInterval& I);

/// An interval holding exactly one root of the squarefree polynomial `poly`.
/// A degenerate box (lo == hi) is an exact rational root and has zero signs.
struct RootBox {
  RatInterval interval;
  IntPoly poly;
  int sign_left = 0;
  int sign_right = 0;

  bool is_exact() const { return interval.lo == interval.hi; }
  Enclosure enclosure(mpfr_prec_t prec = Enclosure::kDefaultPrecision) const { return Enclosure::of(interval, prec); }
};

/// Isolating boxes for all distinct real roots, in increasing order.
/// Endpoints of non-degenerate boxes are dyadic and not roots.
std::vector<RootBox> isolate_roots(const IntPoly& p);
/// Boxes for the distinct roots lying in the closed interval I, each box
/// contained in I.
std::vector<RootBox> isolate_roots_in(const IntPoly& p, const RatInterval& I);

/// Bisects until the width is at most eps.
RootBox refine(const RootBox& box, const Rational& eps);
/// One bisection step.
RootBox bisect(const RootBox& box);

/// -1, 0 or 1 as the root of a is below, equal to, or above the root of b.
/// Refines both boxes as needed.
int compare_roots(RootBox& a, RootBox& b);

/// Outward enclosure of max root - min root. Throws ComplexRoots unless
/// every root is real.
Enclosure root_span(const IntPoly& p, mpfr_prec_t prec = 128);
/// Outward rational interval [min root, max root] with endpoint boxes
/// refined to width eps. Throws ComplexRoots unless every root is real.
RatInterval root_range(const IntPoly& p, const Rational& eps);

/// Horner evaluation with outward rounding.
Enclosure eval_ball(const IntPoly& p, const Enclosure& x);

}  // namespace intcheb
