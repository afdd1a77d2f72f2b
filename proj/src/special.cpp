#include "intcheb/special.hpp"

#include <algorithm>

#include "intcheb/error.hpp"
#include "intcheb/factor.hpp"
#include "intcheb/real_roots.hpp"

namespace intcheb {

namespace {

constexpr mpfr_prec_t kPrec = 128;

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<ConjectureCheck> check_oriented(const Integer& b1, const Integer& c1, const Integer& b2,
                                              const Integer& c2) {
  if (c1 < 2) return std::nullopt;
  const Integer s = mod(b1 * b1, c1);
  int eps;
  if (s == 1 % c1) {
    eps = 1;
  } else if (s == c1 - 1) {
    eps = -1;
  } else {
    return std::nullopt;
  }
  // Smallest |B| in the class of b2^2 mod c2, positive first on ties.
  const Integer r = mod(b2 * b2, c2);
  std::vector<Integer> cands{r, r - c2};
  std::stable_sort(cands.begin(), cands.end(), [](const Integer& x, const Integer& y) {
    if (abs(x) != abs(y)) return abs(x) < abs(y);
    return x > y;
  });
  for (const Integer& B : cands) {
    if (c1 * c1 * abs(B) >= c2 * c2) continue;
    const Integer u = (eps - b1 * b1) / c1;
    const Integer v = (B - b2 * b2) / c2;
    const Integer p = v * c1 - u * c2;
    const Integer q = b2 * u - b1 * v;
    const IntPoly P({q, p, Integer(1)});
    // Exact confirmation of the construction.
    const Rational x1(b1, c1), x2(b2, c2);
    if (evaluate(P, x1) != Rational(eps, c1 * c1) || evaluate(P, x2) != Rational(B, c2 * c2)) continue;
    Rational crit(-p, 2);
    crit.canonicalize();
    if (x1 < crit && crit < x2) continue;
    ConjectureCheck out;
    out.proved = true;
    out.value = Rational(1, c1);
    out.B = B;
    out.witness = P;
    return out;
  }
  return std::nullopt;
}

Enclosure exact(const Rational& q) { return Enclosure::exact(q, kPrec); }

Enclosure xlogx(const Rational& x) {
  if (x == 0) return exact(0);
  return exact(x) * log(exact(x));
}

}  // namespace

void FareyInterval::validate() const {
  if (c1 < 1 || c2 < 1) throw Error(ErrorKind::InvalidInput, "Farey denominators must be positive");
  if (b2 * c1 - b1 * c2 != 1) throw Error(ErrorKind::InvalidInput, "b2 c1 - b1 c2 must be 1");
}

std::string to_string(FareyCase c) {
  switch (c) {
    case FareyCase::LeftEndpoint:
      return "left-endpoint";
    case FareyCase::RightEndpoint:
      return "right-endpoint";
    case FareyCase::FullFarey:
      return "full-farey";
    case FareyCase::Mediant:
      return "mediant";
  }
  return "?";
}

FareyInterval minimal_farey_interval(const RatInterval& I) {
  if (I.width() <= 0) throw Error(ErrorKind::InvalidInput, "interval must have positive length");
  const Integer n = floor_of(I.lo);
  if (Rational(n + 1) < I.hi) throw Error(ErrorKind::ContainsInteger, "an integer lies inside the interval");
  // Stern-Brocot descent from [n, n+1] to the first mediant inside I.
  FareyInterval f{n, 1, n + 1, 1};
  while (true) {
    const Rational m = f.mediant();
    if (I.lo < m && m < I.hi) return f;
    if (m <= I.lo) {
      f.b1 += f.b2;
      f.c1 += f.c2;
    } else {
      f.b2 += f.b1;
      f.c2 += f.c1;
    }
  }
}

ObstructionVerdict farey_max_obstruction(const RatInterval& I) {
  const FareyInterval f = minimal_farey_interval(I);
  const bool in1 = I.contains(f.left());
  const bool in2 = I.contains(f.right());
  const IntPoly q1 = IntPoly::linear(f.c1, -f.b1);
  const IntPoly q2 = IntPoly::linear(f.c2, -f.b2);
  if (f.c1 >= 2 && f.c2 >= 2 && in1 && in2) {
    return f.c1 <= f.c2 ? ObstructionVerdict{Rational(1, f.c1), q1, FareyCase::FullFarey}
                        : ObstructionVerdict{Rational(1, f.c2), q2, FareyCase::FullFarey};
  }
  if (f.c1 >= 2 && in1 && !in2) return {Rational(1, f.c1), q1, FareyCase::LeftEndpoint};
  if (f.c2 >= 2 && !in1 && in2) return {Rational(1, f.c2), q2, FareyCase::RightEndpoint};
  return {Rational(1, f.c1 + f.c2), IntPoly::linear(f.c1 + f.c2, -(f.b1 + f.b2)), FareyCase::Mediant};
}

ConjectureCheck farey_conjecture_check(const FareyInterval& F) {
  F.validate();
  if (F.c1 < 2 && F.c2 < 2) throw Error(ErrorKind::InvalidInput, "needs a denominator of at least 2");
  if (auto r = check_oriented(F.b1, F.c1, F.b2, F.c2)) return *r;
  // x -> -x maps the interval to [-b2/c2, -b1/c1].
  if (auto r = check_oriented(-F.b2, F.c2, -F.b1, F.c1)) {
    r->reflected = true;
    r->witness = reflect(r->witness, 0);
    return *r;
  }
  return {};
}

std::vector<std::pair<Integer, Integer>> pell_solutions(const IntPoly& p, long limit) {
  if (p.degree() != 2 || !p.is_monic()) throw Error(ErrorKind::InvalidInput, "need a monic quadratic");
  const Integer a1 = p.coeff(1), a0 = p.coeff(0);
  const Integer bound = abs(a1) + abs(a0) + 2;
  std::vector<std::pair<Integer, Integer>> out;
  for (long c = 1; c <= limit; ++c) {
    const Integer lim = bound * c;
    for (Integer b = -lim; b <= lim; ++b) {
      const Integer v = b * b + a1 * b * c + a0 * c * c;
      if (v == 1 || v == -1) out.emplace_back(b, Integer(c));
    }
  }
  return out;
}

std::vector<PellInterval> pell_family(const IntPoly& p, long limit) {
  if (p.degree() != 2 || !p.is_monic()) throw Error(ErrorKind::InvalidInput, "need a monic quadratic");
  const Integer disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0);
  if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) {
    throw Error(ErrorKind::ReducibleOrComplex, to_string(p) + " is reducible or has complex roots");
  }
  const auto sols = pell_solutions(p, limit);
  const Rational crit(-p.coeff(1), 2);
  std::vector<PellInterval> out;
  for (RootBox root : isolate_roots(p)) {
    // Solutions below this root and on its side of the critical point, the
    // largest ratio per denominator, then a chain with b/c increasing.
    const bool upper = root.interval.lo > crit;
    std::vector<std::pair<Integer, Integer>> below;
    for (const auto& s : sols) {
      const Rational x(s.first, s.second);
      if (upper ? x <= crit : x >= crit) continue;
      RootBox pt{RatInterval(x, x), IntPoly::linear(s.second, -s.first), 0, 0};
      if (compare_roots(pt, root) >= 0) continue;
      if (!below.empty() && below.back().second == s.second) {
        if (Rational(below.back().first, below.back().second) < x) below.back() = s;
      } else {
        below.push_back(s);
      }
    }
    std::vector<std::pair<Integer, Integer>> chain;
    for (const auto& s : below) {
      if (chain.empty() || Rational(s.first, s.second) > Rational(chain.back().first, chain.back().second)) {
        chain.push_back(s);
      }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const auto& [bi, ci] = chain[i];
      if (ci < 2) continue;
      const Rational lo(bi, ci);
      const Rational hi(chain[i + 1].first, chain[i + 1].second);
      // No half-integer strictly inside.
      const Integer k = floor_of(2 * lo) + 1;
      if (k < 2 * hi) continue;
      // Right Farey neighbour b/c of bi/ci: b ci - bi c = 1.
      Integer inv;
      mpz_invert(inv.get_mpz_t(), Integer(mod(bi, ci)).get_mpz_t(), ci.get_mpz_t());
      Integer c = mod(-inv, ci);
      if (c == 0) c = ci;
      Integer b = (1 + bi * c) / ci;
      while (Rational(b, c) > hi) {
        c += ci;
        b += bi;
      }
      const Rational right(b, c);
      if (lo < crit && crit < right) continue;
      if (abs(evaluate(p, lo)) != Rational(1, ci * ci)) continue;
      if (abs(evaluate(p, right)) > Rational(1, ci * ci)) continue;
      out.push_back({FareyInterval{bi, ci, b, c}, Rational(1, ci)});
    }
  }
  return out;
}

IntPoly p_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  return IntPoly::monomial(1, static_cast<std::size_t>(n * n - 2)) * IntPoly({1, -n, 1});
}

DeltaN delta_n(int n) {
  const IntPoly pn = p_n(n);
  const IntPoly quad({1, -n, 1});
  // beta_n: the smaller root of x^2 - n x + 1.
  RootBox beta = isolate_roots(quad).front();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n * n));
  std::optional<RootBox> best;
  for (int s : {1, -1}) {
    const IntPoly r = pn * scale - IntPoly::constant(s);
    for (RootBox box : isolate_roots(r)) {
      RootBox bcopy = beta;
      if (compare_roots(box, bcopy) <= 0) continue;
      if (!best) {
        best = box;
      } else {
        RootBox cur = *best;
        if (compare_roots(box, cur) < 0) best = box;
      }
      break;  // boxes are increasing
    }
  }
  if (!best) throw Error(ErrorKind::NoRoot, "no root above beta_n");
  Rational eps(1);
  mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), 100);
  DeltaN out{refine(beta, eps).enclosure(kPrec), refine(*best, eps).enclosure(kPrec), false};

  // Shape: P_n' = x^(n^2-3) (n x - 1) g with g linear; g's root must not lie
  // in (0, beta_n).
  const IntPoly d = derivative(pn);
  const IntPoly core = exact_quotient(d, IntPoly::monomial(1, static_cast<std::size_t>(n * n - 3)));
  bool ok = evaluate(core, Rational(1, n)) == 0;
  if (ok) {
    const IntPoly g = exact_quotient(core, IntPoly::linear(n, -1));
    ok = g.degree() == 1;
    for (RootBox box : isolate_roots(g)) {
      RootBox bcopy = beta;
      if (sign_at(g, 0) == 0 || (box.interval.hi > 0 && compare_roots(box, bcopy) < 0)) ok = false;
    }
  }
  out.shape_verified = ok;
  return out;
}

Enclosure gamma_lower(const Rational& b, const Rational& m) {
  if (b <= 0 || b > 1) throw Error(ErrorKind::InvalidInput, "b must lie in (0, 1]");
  if (m <= 0 || m >= 1) throw Error(ErrorKind::InvalidInput, "m must lie in (0, 1)");
  const Enclosure log_b = log(exact(b));
  const Enclosure log_m = log(exact(m));
  auto phi = [&](const Rational& x) {
    return xlogx(1 + x) - xlogx(1 - x) - xlogx(2 * x) - exact(x) * log_b + log_m;
  };
  // phi increases on (0, x*], x* = 1/sqrt(1 + 4b); phi(0+) = ln m < 0.
  Rational hi = Enclosure(sqrt(exact(1 + 4 * b))).upper();
  hi = 1 / hi;
  const Enclosure top = phi(hi);
  if (top.certainly_negative()) throw Error(ErrorKind::NoRoot, "the defining function stays below ln(1/m)");
  if (!top.certainly_positive()) throw Error(ErrorKind::Undecided, "cannot decide the sign at the maximum");
  Rational lo = 0;
  const Rational width(1, Integer("1000000000000"));
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const Enclosure v = phi(mid);
    if (v.certainly_negative()) {
      lo = mid;
    } else if (v.certainly_positive()) {
      hi = mid;
    } else {
      break;
    }
  }
  return Enclosure::hull(lo, hi, kPrec);
}

}  // namespace intcheb
