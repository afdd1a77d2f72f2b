#pragma once

// The value a^(-1/d) carried exactly as the pair (a, d).

#include <compare>
#include <string>

#include "intcheb/enclosure.hpp"
#include "intcheb/poly.hpp"

namespace intcheb {

class ObstructionValue {
 public:
  /// a >= 1, d >= 1.
  ObstructionValue(Integer base, unsigned long root_index);
  /// Lead coefficient and degree of q.
  static ObstructionValue of(const IntPoly& q);

  const Integer& base() const { return base_; }
  unsigned long root_index() const { return d_; }

  /// Exact: a^e vs c^d, the larger power being the smaller value.
  friend std::strong_ordering operator<=>(const ObstructionValue& x, const ObstructionValue& y);
  friend bool operator==(const ObstructionValue& x, const ObstructionValue& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  /// Sign of value - t, exact. Any t <= 0 is below the value.
  int compare(const Rational& t) const;
  bool exceeds(const Rational& t) const { return compare(t) > 0; }

  /// Exact value when a is a perfect d-th power.
  bool is_rational() const;
  Rational as_rational() const;

  Enclosure enclose(mpfr_prec_t prec = Enclosure::kDefaultPrecision) const;
  /// -log(a)/d
  Enclosure log_enclosure(mpfr_prec_t prec = Enclosure::kDefaultPrecision) const;

  /// "1/2" when rational, else "7^(-1/3)".
  std::string to_string() const;

 private:
  Integer base_;
  unsigned long d_;
};

}  // namespace intcheb
