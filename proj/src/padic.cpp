#include "intcheb/padic.hpp"

#include <algorithm>

#include "intcheb/error.hpp"
#include "intcheb/factor.hpp"

namespace intcheb {

namespace {

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long valuation(Integer n, const Integer& p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Sign-normalized irreducible factors of R, each check run once.
std::vector<IntPoly> distinct_factors(const FactoredPoly& r) {
  std::vector<IntPoly> out;
  for (const auto& [f, e] : r) {
    if (e < 1) throw Error(ErrorKind::InvalidInput, "exponents must be positive");
    for (const auto& sf : factor(f).factors) {
      if (std::find(out.begin(), out.end(), sf.factor) == out.end()) out.push_back(sf.factor);
    }
  }
  return out;
}

Enclosure certified_log_sup(const FactoredPoly& r, const RatInterval& I, mpfr_prec_t prec) {
  return log_sup_bound(WeightedProduct::from_exponents(r), I, prec);
}

}  // namespace

AttainmentVerdict attainment_obstruction(const IntPoly& q) {
  if (q.degree() < 1) throw Error(ErrorKind::InvalidInput, "need a nonconstant polynomial");
  const Integer ad = abs(q.lead());
  if (ad == 1) throw Error(ErrorKind::MonicInput, to_string(q) + " is monic");
  AttainmentVerdict v;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.coeff(0).get_mpz_t(), ad.get_mpz_t());
  v.gcd_failure = g != 1;
  const int d = q.degree();
  for (const Integer& p : prime_factors(ad)) {
    const long e = valuation(ad, p);
    for (int i = 0; i <= d; ++i) {
      const Integer a = q.coeff(static_cast<std::size_t>(d - i));
      const Rational required(e * (d - i), d);
      if (a == 0) continue;
      const long actual = valuation(a, p);
      if (Rational(actual) < required) v.failures.push_back({p, d - i, required, actual});
    }
  }
  v.status = (v.gcd_failure || !v.failures.empty()) ? AttainmentVerdict::Status::Impossible
                                                    : AttainmentVerdict::Status::Consistent;
  return v;
}

CriticalWitness critical_witness(const FactoredPoly& r, const IntPoly& q, const RatInterval& I,
                                 mpfr_prec_t max_precision) {
  bool divides_r = false;
  for (const auto& [f, e] : r) divides_r = divides_r || divides(q, f);
  if (!divides_r) throw Error(ErrorKind::QNotDividingR, to_string(q) + " does not divide R");
  if (!all_roots_in(q, I)) throw Error(ErrorKind::RootsEscapeI, "not every root of " + to_string(q) + " lies in I");
  const ObstructionValue value = ObstructionValue::of(q);
  CriticalWitness w;
  for (mpfr_prec_t prec = 64; prec <= max_precision; prec *= 2) {
    w.log_sup = certified_log_sup(r, I, prec);
    w.precision = prec;
    if (w.log_sup.certainly_less(value.log_enclosure(prec))) {
      w.critical = true;
      return w;
    }
    // A gap that is already certainly nonnegative will not close.
    if (value.log_enclosure(prec).certainly_less(Enclosure::exact(w.log_sup.lower(), prec))) return w;
  }
  return w;
}

ObstructionRecord identify_maximal_critical(const FactoredPoly& r, const RatInterval& I, mpfr_prec_t max_precision) {
  const auto factors = distinct_factors(r);
  std::vector<IntPoly> nonmonic;
  for (const IntPoly& f : factors) {
    if (f.lead() >= 2 && all_roots_in(f, I)) nonmonic.push_back(f);
  }
  if (nonmonic.empty()) throw Error(ErrorKind::NoCandidate, "no nonmonic factor has all its roots in I");
  std::vector<IntPoly> above;
  for (const IntPoly& f : nonmonic) {
    const ObstructionValue value = ObstructionValue::of(f);
    for (mpfr_prec_t prec = 64; prec <= max_precision; prec *= 2) {
      const Enclosure u = certified_log_sup(r, I, prec);
      if (u.certainly_less(value.log_enclosure(prec))) {
        above.push_back(f);
        break;
      }
      if (value.log_enclosure(prec).certainly_less(Enclosure::exact(u.lower(), prec))) break;
      if (prec * 2 > max_precision) throw Error(ErrorKind::Undecided, "precision cap comparing " + to_string(f));
    }
  }
  if (above.empty()) throw Error(ErrorKind::NoCandidate, "no factor value exceeds the sup of R");
  if (above.size() > 1) throw Error(ErrorKind::MultipleCandidates, "several factors exceed the sup of R");
  return make_record(above.front());
}

}  // namespace intcheb
