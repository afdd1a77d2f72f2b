#include "intcheb/real_roots.hpp"

#include <algorithm>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

// Divides by the positive content, keeping the sign of every coefficient.
IntPoly strip_content(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  std::vector<Integer> v(p.coeffs());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// The linear factor den*x - num of a rational root.
IntPoly linear_factor(Rational r) {
  r.canonicalize();
  return IntPoly::linear(r.get_den(), -r.get_num());
}

IntPoly squarefree_or_throw(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  if (p.degree() <= 0) return IntPoly::constant(1);
  return squarefree_part(p);
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm sequence of zero");
  seq_.push_back(strip_content(squarefree));
  if (squarefree.degree() == 0) return;
  seq_.push_back(strip_content(derivative(squarefree)));
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int power = a.degree() - b.degree() + 1;
    // prem = lc(b)^power * rem; we want -rem up to a positive factor.
    const bool flips = b.lead() < 0 && power % 2 == 1;
    seq_.push_back(strip_content(flips ? r : -r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sign_at(p, x));
  return count_changes(s);
}

int SturmSequence::variations_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sign_at_pos_inf(p));
  return count_changes(s);
}

int SturmSequence::variations_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sign_at_neg_inf(p));
  return count_changes(s);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return variations(a) - variations(b);
}

int count_roots_in(const IntPoly& p, const RatInterval& I) {
  IntPoly q = squarefree_or_throw(p);
  if (q.degree() <= 0) return 0;
  int count = 0;
  if (sign_at(q, I.lo) == 0) {
    ++count;
    q = exact_quotient(q, linear_factor(I.lo));
  }
  if (I.hi == I.lo) return count;
  if (q.degree() > 0 && sign_at(q, I.hi) == 0) {
    ++count;
    q = exact_quotient(q, linear_factor(I.hi));
  }
  if (q.degree() <= 0) return count;
  return count + SturmSequence(q).count_open(I.lo, I.hi);
}

int count_real_roots(const IntPoly& p) {
  IntPoly q = squarefree_or_throw(p);
  if (q.degree() <= 0) return 0;
  SturmSequence s(q);
  return s.variations_neg_inf() - s.variations_pos_inf();
}

int count_roots_with_multiplicity(const IntPoly& p, const RatInterval& I) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  int total = 0;
  for (const auto& sf : squarefree_decomposition(p)) total += sf.multiplicity * count_roots_in(sf.factor, I);
  return total;
}

bool all_roots_in(const IntPoly& p, const RatInterval& I) {
  return count_roots_with_multiplicity(p, I) == p.degree();
}

std::vector<RootBox> isolate_roots(const IntPoly& p) {
  IntPoly q = squarefree_or_throw(p);
  std::vector<RootBox> out;
  if (q.degree() <= 0) return out;
  q = primitive_part(q);

  // Cauchy bound 1 + max|a_i|/|a_d|, rounded up to a power of two.
  Integer max_coeff = 0;
  for (int i = 0; i < q.degree(); ++i) max_coeff = std::max(max_coeff, Integer(abs(q.coeffs()[i])));
  Rational bound(max_coeff, abs(q.lead()));
  bound.canonicalize();
  bound += 1;
  Rational r = 1;
  while (r <= bound) r *= 2;

  SturmSequence sturm(q);
  struct Task {
    Rational a, b;
    int count;
  };
  std::vector<Task> stack;
  stack.push_back({-r, r, sturm.count_open(-r, r)});
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.count == 0) continue;
    if (t.count == 1) {
      out.push_back({RatInterval(t.a, t.b), q, sign_at(q, t.a), sign_at(q, t.b)});
      continue;
    }
    Rational m = (t.a + t.b) / 2;
    if (sign_at(q, m) != 0) {
      stack.push_back({t.a, m, sturm.count_open(t.a, m)});
      stack.push_back({m, t.b, sturm.count_open(m, t.b)});
      continue;
    }
    out.push_back({RatInterval(m, m), q, 0, 0});
    Rational eps = (t.b - t.a) / 4;
    while (true) {
      Rational l = m - eps;
      Rational h = m + eps;
      if (sign_at(q, l) != 0 && sign_at(q, h) != 0 && sturm.count_open(l, h) == 1) {
        stack.push_back({t.a, l, sturm.count_open(t.a, l)});
        stack.push_back({h, t.b, sturm.count_open(h, t.b)});
        break;
      }
      eps /= 2;
    }
  }
  std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) { return x.interval.lo < y.interval.lo; });
  return out;
}

std::vector<RootBox> isolate_roots_in(const IntPoly& p, const RatInterval& I) {
  std::vector<RootBox> out;
  for (RootBox box : isolate_roots(p)) {
    if (box.is_exact()) {
      if (I.contains(box.interval.lo)) out.push_back(box);
      continue;
    }
    // The root lies in the open box.
    if (box.interval.hi <= I.lo || box.interval.lo >= I.hi) continue;
    if (box.interval.lo < I.lo) {
      int s = sign_at(box.poly, I.lo);
      if (s == 0) {
        out.push_back({RatInterval(I.lo, I.lo), box.poly, 0, 0});
        continue;
      }
      if (s != box.sign_left) continue;  // root left of I.lo
      box.interval.lo = I.lo;
      box.sign_left = s;
    }
    if (box.interval.hi > I.hi) {
      int s = sign_at(box.poly, I.hi);
      if (s == 0) {
        out.push_back({RatInterval(I.hi, I.hi), box.poly, 0, 0});
        continue;
      }
      if (s != box.sign_right) continue;  // root right of I.hi
      box.interval.hi = I.hi;
      box.sign_right = s;
    }
    out.push_back(box);
  }
  return out;
}

RootBox bisect(const RootBox& box) {
  if (box.is_exact()) return box;
  Rational m = box.interval.mid();
  int s = sign_at(box.poly, m);
  if (s == 0) return {RatInterval(m, m), box.poly, 0, 0};
  if (s == box.sign_left) return {RatInterval(m, box.interval.hi), box.poly, s, box.sign_right};
  return {RatInterval(box.interval.lo, m), box.poly, box.sign_left, s};
}

RootBox refine(const RootBox& box, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorKind::InvalidInput, "refine needs a positive width");
  RootBox b = box;
  while (b.interval.width() > eps) b = bisect(b);
  return b;
}

int compare_roots(RootBox& a, RootBox& b) {
  for (int iter = 0;; ++iter) {
    const auto& A = a.interval;
    const auto& B = b.interval;
    if (a.is_exact() && b.is_exact() && A.lo == B.lo) return 0;
    if (A.hi < B.lo || (A.hi == B.lo && !(a.is_exact() && b.is_exact()))) return -1;
    if (B.hi < A.lo || (B.hi == A.lo && !(a.is_exact() && b.is_exact()))) return 1;
    if (iter == 64) {
      // Overlapping after many steps: the roots may coincide.
      IntPoly g = gcd(a.poly, b.poly);
      if (g.degree() > 0) {
        RatInterval common(std::max(A.lo, B.lo), std::min(A.hi, B.hi));
        if (count_roots_in(g, common) > 0 && count_roots_in(a.poly, common) == 1) return 0;
      }
    }
    if (A.width() >= B.width()) {
      a = bisect(a);
    } else {
      b = bisect(b);
    }
  }
}

namespace {

std::vector<RootBox> all_real_boxes(const IntPoly& p) {
  IntPoly q = squarefree_or_throw(p);
  std::vector<RootBox> boxes = isolate_roots(q);
  if (static_cast<int>(boxes.size()) != q.degree()) {
    throw Error(ErrorKind::ComplexRoots, to_string(p) + " has non-real roots");
  }
  if (boxes.empty()) throw Error(ErrorKind::InvalidInput, "constant polynomial has no roots");
  return boxes;
}

}  // namespace

RatInterval root_range(const IntPoly& p, const Rational& eps) {
  auto boxes = all_real_boxes(p);
  RootBox lo = refine(boxes.front(), eps);
  RootBox hi = refine(boxes.back(), eps);
  return {lo.interval.lo, hi.interval.hi};
}

Enclosure root_span(const IntPoly& p, mpfr_prec_t prec) {
  auto boxes = all_real_boxes(p);
  Rational eps(1);
  mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), static_cast<mp_bitcnt_t>(prec + 8));
  RootBox lo = refine(boxes.front(), eps);
  RootBox hi = refine(boxes.back(), eps);
  Rational span_lo = hi.interval.lo - lo.interval.hi;
  if (span_lo < 0) span_lo = 0;
  return Enclosure::hull(span_lo, hi.interval.hi - lo.interval.lo, prec);
}

Enclosure eval_ball(const IntPoly& p, const Enclosure& x) {
  const mpfr_prec_t prec = x.precision();
  if (p.is_zero()) return Enclosure(prec);
  Enclosure acc = Enclosure::exact(Rational(p.lead()), prec);
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + Enclosure::exact(Rational(p.coeffs()[i]), prec);
  return acc;
}

}  // namespace intcheb
