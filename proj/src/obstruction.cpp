#include "intcheb/obstruction.hpp"

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

Integer power(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

ObstructionValue::ObstructionValue(Integer base, unsigned long root_index) : base_(std::move(base)), d_(root_index) {
  if (base_ < 1 || d_ < 1) throw Error(ErrorKind::InvalidInput, "obstruction value needs a >= 1 and d >= 1");
}

ObstructionValue ObstructionValue::of(const IntPoly& q) {
  if (q.degree() < 1) throw Error(ErrorKind::InvalidInput, "obstruction polynomial must be nonconstant");
  return ObstructionValue(abs(q.lead()), static_cast<unsigned long>(q.degree()));
}

std::strong_ordering operator<=>(const ObstructionValue& x, const ObstructionValue& y) {
  const Integer lhs = power(x.base_, y.d_);
  const Integer rhs = power(y.base_, x.d_);
  if (lhs == rhs) return std::strong_ordering::equal;
  return lhs > rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

int ObstructionValue::compare(const Rational& t) const {
  if (t <= 0) return 1;
  // a^(-1/d) vs p/q  <=>  q^d vs a p^d
  const Integer lhs = power(t.get_den(), d_);
  const Integer rhs = base_ * power(t.get_num(), d_);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

bool ObstructionValue::is_rational() const {
  return mpz_root(Integer().get_mpz_t(), base_.get_mpz_t(), d_) != 0;
}

Rational ObstructionValue::as_rational() const {
  Integer r;
  if (mpz_root(r.get_mpz_t(), base_.get_mpz_t(), d_) == 0) {
    throw Error(ErrorKind::InvalidInput, to_string() + " is irrational");
  }
  return Rational(1, r);
}

Enclosure ObstructionValue::log_enclosure(mpfr_prec_t prec) const {
  return -(log(Enclosure::exact(Rational(base_), prec)) / Enclosure::exact(Rational(static_cast<long>(d_)), prec));
}

Enclosure ObstructionValue::enclose(mpfr_prec_t prec) const {
  if (is_rational()) return Enclosure::exact(as_rational(), prec);
  return exp(log_enclosure(prec));
}

std::string ObstructionValue::to_string() const {
  if (is_rational()) return intcheb::to_string(as_rational());
  return base_.get_str() + "^(-1/" + std::to_string(d_) + ")";
}

}  // namespace intcheb
