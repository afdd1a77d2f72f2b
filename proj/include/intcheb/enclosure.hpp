#pragma once

// Exact rational intervals and outward-rounded MPFR enclosures.

#include <mpfr.h>

#include <string>

#include "intcheb/poly.hpp"

namespace intcheb {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational lo_, Rational hi_);

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  RatInterval translated(const Rational& c) const { return {lo + c, hi + c}; }
  /// {1 - x : x in this}
  RatInterval reflected() const { return {1 - hi, 1 - lo}; }
  friend bool operator==(const RatInterval& a, const RatInterval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Parses two endpoint strings ("p/q" or decimal) into an interval.
RatInterval parse_interval(std::string_view lo, std::string_view hi);

/// Real interval [inf, sup] held as two MPFR numbers at a fixed precision.
/// Every operation rounds outward, so the true value is always enclosed.
/// Endpoints may be infinite (e.g. log of an interval touching zero).
class Enclosure {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 64;

  explicit Enclosure(mpfr_prec_t prec = kDefaultPrecision);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure exact(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
  static Enclosure exact(long v, mpfr_prec_t prec = kDefaultPrecision);
  static Enclosure hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec = kDefaultPrecision);
  static Enclosure of(const RatInterval& I, mpfr_prec_t prec = kDefaultPrecision) { return hull(I.lo, I.hi, prec); }
  /// Enclosure from a center and radius.
  static Enclosure ball(const Rational& center, const Rational& radius, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* inf() const { return lo_; }
  const __mpfr_struct* sup() const { return hi_; }

  /// Exact endpoints; throws if an endpoint is infinite or NaN.
  Rational lower() const;
  Rational upper() const;
  /// Dyadic midpoint and a dyadic radius with center +- radius covering the
  /// enclosure.
  Rational center() const;
  Rational radius() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const;

  bool is_finite() const;
  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool contains(const Enclosure& other) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_less(const Enclosure& other) const;      // sup < other.inf
  bool certainly_less(const Rational& q) const;            // sup < q
  bool certainly_greater(const Rational& q) const;         // inf > q
  bool certainly_at_most(const Rational& q) const;         // sup <= q
  bool certainly_at_least(const Rational& q) const;        // inf >= q

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws Error(Undecided) when the divisor contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  Enclosure operator-() const;
  Enclosure& operator+=(const Enclosure& b) { return *this = *this + b; }
  Enclosure& operator*=(const Enclosure& b) { return *this = *this * b; }

  friend Enclosure abs(const Enclosure& a);
  /// Natural log; an infimum at or below zero gives -inf. Throws if sup < 0.
  friend Enclosure log(const Enclosure& a);
  friend Enclosure exp(const Enclosure& a);
  friend Enclosure sqrt(const Enclosure& a);
  friend Enclosure hull(const Enclosure& a, const Enclosure& b);

  /// "[lo, hi]" with the given number of significant digits, rounded outward.
  std::string to_string(int digits = 12) const;

 private:
  void init(mpfr_prec_t prec);
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Formats x to `digits` significant digits rounded down (or up).
std::string format_down(const Enclosure& e, int digits = 10);
std::string format_up(const Enclosure& e, int digits = 10);

}  // namespace intcheb
