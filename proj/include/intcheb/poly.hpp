#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intcheb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal string ("-0.303", "1e-3") into an
/// exact rational. Decimal strings never pass through binary floating point.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Integer-coefficient polynomial a_0 + a_1 x + ... + a_d x^d, stored low to
/// high with no zero coefficients above the degree. Immutable value type.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// a1 x + a0
  static IntPoly linear(const Integer& a1, const Integer& a0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& lead() const;
  bool is_monic() const { return !is_zero() && lead() == 1; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const Integer& c);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Deterministic order: by degree, then lexicographic on coefficients from
  /// the leading one down.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned long e);

Rational evaluate(const IntPoly& p, const Rational& x);
/// Sign of p(x), computed on the homogenized integer form (no rationals).
int sign_at(const IntPoly& p, const Rational& x);
/// Sign of p at +infinity / -infinity.
int sign_at_pos_inf(const IntPoly& p);
int sign_at_neg_inf(const IntPoly& p);

IntPoly derivative(const IntPoly& p, unsigned k = 1);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);
/// p / content(p), normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) a = q b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Quotient a / b when b divides a in Z[x]; false otherwise.
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
  IntPoly factor;
  int multiplicity;
};
/// Yun's algorithm on the primitive part: p ~ prod factor^multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

/// Resultant with the Sylvester-matrix sign convention (p's coefficients in the
/// top rows). Uses the subresultant sequence above degree 6, Sylvester below.
Integer resultant(const IntPoly& p, const IntPoly& q);
Integer resultant_sylvester(const IntPoly& p, const IntPoly& q);
Integer resultant_subresultant(const IntPoly& p, const IntPoly& q);

/// p(x + c)
IntPoly translate(const IntPoly& p, const Integer& c);
/// p(c - x)
IntPoly reflect(const IntPoly& p, const Integer& c);
/// c^deg(p) * p(x / c): the polynomial whose roots are c times those of p.
IntPoly scale_roots(const IntPoly& p, const Integer& c);

/// Term syntax, e.g. "7x^3-7x^2+1".
std::string to_string(const IntPoly& p);
/// Accepts term syntax ("7x^3 - 7x^2 + 1", "x", "2x2-1") or the JSON
/// coefficient form {"coeffs": [...]}. Throws Error(ParseError).
IntPoly parse_poly(std::string_view text);

/// Horner evaluation of a polynomial given by rational coefficients.
Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace intcheb
