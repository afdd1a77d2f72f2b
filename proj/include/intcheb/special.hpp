#pragma once

// Farey intervals and their maximal obstructions, Pell families of monic
// quadratics, the P_n family on [0, 1/n + delta], and the bound gamma(b).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intcheb/enclosure.hpp"
#include "intcheb/poly.hpp"

namespace intcheb {

/// [b1/c1, b2/c2] with b2 c1 - b1 c2 = 1.
struct FareyInterval {
  Integer b1, c1, b2, c2;

  Rational left() const { return Rational(b1, c1); }
  Rational right() const { return Rational(b2, c2); }
  RatInterval interval() const { return {left(), right()}; }
  Rational mediant() const { return Rational(b1 + b2, c1 + c2); }
  /// Throws InvalidInput unless the determinant and sign invariants hold.
  void validate() const;
};

enum class FareyCase { LeftEndpoint, RightEndpoint, FullFarey, Mediant };
std::string to_string(FareyCase c);

struct ObstructionVerdict {
  Rational value;
  IntPoly polynomial;
  FareyCase case_tag;
};

/// Consecutive fractions of the Farey sequence of order q - 1 bracketing I,
/// q the least denominator of a fraction in the interior of I.
/// Throws ContainsInteger.
FareyInterval minimal_farey_interval(const RatInterval& I);

/// Four-case maximal obstruction for an interval with no integer inside;
/// endpoint membership is closed.
ObstructionVerdict farey_max_obstruction(const RatInterval& I);

struct ConjectureCheck {
  bool proved = false;
  /// 1/c of the endpoint carrying the obstruction when proved.
  Rational value;
  /// The residue B and the monic quadratic with P(b1/c1) = +-1/c1^2 and
  /// P(b2/c2) = B/c2^2; when `reflected` the roles of the endpoints swap.
  /// The witness is always in the original coordinate.
  Integer B;
  IntPoly witness;
  bool reflected = false;
};

/// Hypotheses b1^2 = +-1 (mod c1), b2^2 = B (mod c2), c1^2 |B| < c2^2, tried
/// as given and for the mirror image x -> -x. Never reports a negative.
/// Throws InvalidInput when both denominators are below 2.
ConjectureCheck farey_conjecture_check(const FareyInterval& F);

/// Solutions (b, c), 1 <= c <= limit, of b^2 + a1 b c + a0 c^2 = +-1.
std::vector<std::pair<Integer, Integer>> pell_solutions(const IntPoly& p, long limit);

struct PellInterval {
  FareyInterval interval;
  /// t_M of the interval, 1/c_i.
  Rational value;
};
/// Farey brackets [b_i/c_i, b/c] on which p attains the maximal obstruction
/// 1/c_i, from solutions with c_i and b_i/c_i increasing. Each is checked
/// exactly. Throws ReducibleOrComplex.
std::vector<PellInterval> pell_family(const IntPoly& p, long limit);

struct DeltaN {
  Enclosure beta;
  Enclosure alpha;
  /// P_n increasing on [0, 1/n] and decreasing on [1/n, beta_n], by exact
  /// root counts of P_n'.
  bool shape_verified = false;
};
/// beta_n = 2 / (n + sqrt(n^2 - 4)) and alpha_n, the least root > beta_n of
/// |P_n(x)| = n^(-n^2), P_n = x^(n^2-2) (x^2 - n x + 1).
DeltaN delta_n(int n);
IntPoly p_n(int n);

/// Least positive root of
///   (1+x) ln(1+x) - (1-x) ln(1-x) - 2x ln(2x) - x ln b = ln(1/m).
/// Throws NoRoot when the left side stays below ln(1/m).
Enclosure gamma_lower(const Rational& b, const Rational& m);

}  // namespace intcheb
