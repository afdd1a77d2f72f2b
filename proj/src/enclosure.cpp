#include "intcheb/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "intcheb/error.hpp"

namespace intcheb {

RatInterval::RatInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) throw Error(ErrorKind::InvalidInput, "interval with lo > hi: [" + intcheb::to_string(lo) + ", " + intcheb::to_string(hi) + "]");
}

RatInterval parse_interval(std::string_view lo, std::string_view hi) {
  return RatInterval(parse_rational(lo), parse_rational(hi));
}

void Enclosure::init(mpfr_prec_t prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(mpfr_prec_t prec) { init(prec); }

Enclosure::Enclosure(const Enclosure& other) {
  init(other.prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(static_cast<const Enclosure&>(other)) {}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::exact(const Rational& q, mpfr_prec_t prec) {
  Enclosure e(prec);
  mpfr_set_q(e.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e.hi_, q.get_mpq_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::exact(long v, mpfr_prec_t prec) {
  Enclosure e(prec);
  mpfr_set_si(e.lo_, v, MPFR_RNDD);
  mpfr_set_si(e.hi_, v, MPFR_RNDU);
  return e;
}

Enclosure Enclosure::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  if (lo > hi) throw Error(ErrorKind::InvalidInput, "enclosure with lo > hi");
  Enclosure e(prec);
  mpfr_set_q(e.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return e;
}

Enclosure Enclosure::ball(const Rational& center, const Rational& radius, mpfr_prec_t prec) {
  if (radius < 0) throw Error(ErrorKind::InvalidInput, "negative radius");
  return hull(center - radius, center + radius, prec);
}

namespace {

Rational mpfr_to_rational(const __mpfr_struct* x) {
  if (!mpfr_number_p(x)) throw Error(ErrorKind::Undecided, "enclosure endpoint is not finite");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), const_cast<mpfr_ptr>(x));
  return q;
}

mpfr_prec_t join_prec(const Enclosure& a, const Enclosure& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Rational Enclosure::lower() const { return mpfr_to_rational(lo_); }
Rational Enclosure::upper() const { return mpfr_to_rational(hi_); }
Rational Enclosure::center() const { return (lower() + upper()) / 2; }
Rational Enclosure::radius() const { return (upper() - lower()) / 2; }
double Enclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Enclosure::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

bool Enclosure::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

bool Enclosure::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Enclosure::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Enclosure::contains(const Enclosure& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Enclosure::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Enclosure::certainly_less(const Enclosure& other) const { return mpfr_less_p(hi_, other.lo_); }
bool Enclosure::certainly_less(const Rational& q) const {
  return !mpfr_nan_p(hi_) && mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}
bool Enclosure::certainly_greater(const Rational& q) const {
  return !mpfr_nan_p(lo_) && mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}
bool Enclosure::certainly_at_most(const Rational& q) const {
  return !mpfr_nan_p(hi_) && mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}
bool Enclosure::certainly_at_least(const Rational& q) const {
  return !mpfr_nan_p(lo_) && mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::operator-() const {
  Enclosure r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t prec = join_prec(a, b);
  Enclosure r(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
  const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      // 0 * inf contributes 0: the endpoints are attained limits, not values.
      if ((mpfr_zero_p(x) && mpfr_inf_p(y)) || (mpfr_inf_p(x) && mpfr_zero_p(y))) {
        mpfr_set_zero(tmp, 1);
        if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
        if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
        first = false;
        continue;
      }
      mpfr_mul(tmp, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
      mpfr_mul(tmp, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(tmp);
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw Error(ErrorKind::Undecided, "division by an enclosure containing zero");
  const mpfr_prec_t prec = join_prec(a, b);
  Enclosure inv(prec);
  mpfr_t one;
  mpfr_init2(one, prec);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_div(inv.lo_, one, b.hi_, MPFR_RNDD);
  mpfr_div(inv.hi_, one, b.lo_, MPFR_RNDU);
  mpfr_clear(one);
  return a * inv;
}

Enclosure abs(const Enclosure& a) {
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  Enclosure r(a.prec_);
  mpfr_set_zero(r.lo_, 1);
  if (mpfr_cmpabs(a.lo_, a.hi_) > 0) {
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  }
  return r;
}

Enclosure log(const Enclosure& a) {
  if (mpfr_sgn(a.hi_) < 0) throw Error(ErrorKind::InvalidInput, "log of a negative enclosure");
  Enclosure r(a.prec_);
  if (mpfr_sgn(a.lo_) <= 0) {
    mpfr_set_inf(r.lo_, -1);
  } else {
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  }
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure exp(const Enclosure& a) {
  Enclosure r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure sqrt(const Enclosure& a) {
  if (mpfr_sgn(a.hi_) < 0) throw Error(ErrorKind::InvalidInput, "sqrt of a negative enclosure");
  Enclosure r(a.prec_);
  if (mpfr_sgn(a.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  Enclosure r(join_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

namespace {

std::string format_endpoint(const __mpfr_struct* x, int digits, bool up) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const char* fmt = up ? "%.*RUg" : "%.*RDg";
  mpfr_snprintf(buf.data(), buf.size(), fmt, digits, x);
  return std::string(buf.data());
}

}  // namespace

std::string Enclosure::to_string(int digits) const {
  return "[" + format_endpoint(lo_, digits, false) + ", " + format_endpoint(hi_, digits, true) + "]";
}

std::string format_down(const Enclosure& e, int digits) { return format_endpoint(e.inf(), digits, false); }
std::string format_up(const Enclosure& e, int digits) { return format_endpoint(e.sup(), digits, true); }

}  // namespace intcheb
