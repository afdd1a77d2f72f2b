#include "intcheb/bounds.hpp"

#include <algorithm>
#include <ostream>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

constexpr mpfr_prec_t kPrec = 128;

Enclosure exact(const Rational& q) { return Enclosure::exact(q, kPrec); }

Rational floor_to(const Rational& x, long den) {
  Rational scaled = x * den;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(f, den);
  r.canonicalize();
  return r;
}

// a log|b|, with 0 log 0 = 0.
Enclosure xlogy(const Rational& a, const Enclosure& b) {
  if (a == 0) return exact(0);
  return exact(a) * log(abs(b));
}

// h(a) = ln 4 + a ln a + (1-a) ln(1-a) - a ln 5; its sign decides the branch.
Enclosure h_alpha(const Rational& a) {
  return log(exact(4)) + xlogy(a, exact(a)) + xlogy(1 - a, exact(1 - a)) - exact(a) * log(exact(5));
}

// G(y) = (1-a) ln|1 - y^2| + a ln|1 - y^2/5|
Enclosure g_alpha(const Rational& a, const Rational& y) {
  const Rational y2 = y * y;
  return xlogy(1 - a, exact(1 - y2)) + xlogy(a, exact(1 - y2 / 5));
}

Rational sqrt_approx(const Rational& x, bool upper) {
  const Enclosure s = sqrt(exact(x));
  return upper ? s.upper() : s.lower();
}

void sort_cover(std::vector<CoverEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CoverEntry& x, const CoverEntry& y) { return x.left.lo < y.left.lo; });
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const bool exact_pair = v[i].left.width() == 0 && v[i + 1].left.width() == 0;
    const bool ordered = exact_pair ? v[i].left.lo < v[i + 1].left.lo : v[i].left.hi < v[i + 1].left.lo;
    if (!ordered) {
      throw Error(ErrorKind::Undecided, "left endpoints of " + v[i].label + " and " + v[i + 1].label +
                                            " are not strictly ordered");
    }
  }
  if (v.size() < 2 || !(v.back().left == v.front().left.translated(1))) {
    throw Error(ErrorKind::MissingTranslateClosure, "the last left endpoint is not the first plus one");
  }
}

}  // namespace

CoverEntry CoverEntry::of_record(const ObstructionRecord& r, std::string label) {
  return {r.min_root.interval, r.max_root.interval, std::move(label)};
}

CoverEntry CoverEntry::of_interval(const RatInterval& I, std::string label) {
  return {RatInterval(I.lo, I.lo), RatInterval(I.hi, I.hi), std::move(label)};
}

CoverEntry CoverEntry::translated(const Integer& k) const {
  return {left.translated(Rational(k)), right.translated(Rational(k)), label + "+" + k.get_str()};
}

CoverSystem translate_closed_cover(const std::vector<ObstructionRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::InvalidInput, "empty cover");
  CoverSystem c;
  for (std::size_t i = 0; i < records.size(); ++i) c.entries.push_back(CoverEntry::of_record(records[i], std::to_string(i + 1)));
  c.entries.push_back(c.entries.front().translated(1));
  return c;
}

CoverSystem reflected_product_cover(const std::vector<CertifiedProduct>& products) {
  if (products.empty()) throw Error(ErrorKind::InvalidInput, "empty cover");
  CoverSystem c;
  const std::size_t n = products.size();
  for (std::size_t i = 0; i < n; ++i) c.entries.push_back(CoverEntry::of_interval(products[i].interval, std::to_string(i + 1)));
  for (std::size_t i = n; i-- > 0;) {
    c.entries.push_back(CoverEntry::of_interval(products[i].interval.reflected(), std::to_string(2 * n - i)));
  }
  c.entries.push_back(c.entries.front().translated(1));
  return c;
}

Enclosure lminus_upper(const ObstructionRecord& rec, const Rational& t) {
  if (rec.poly.lead() < 2) throw Error(ErrorKind::InvalidInput, "obstruction must be nonmonic");
  if (!rec.value.exceeds(t)) {
    throw Error(ErrorKind::ValueNotAboveT, rec.value.to_string() + " is not above " + to_string(t));
  }
  return rec.span;
}

GapResult cover_max_gap(const CoverSystem& cover) {
  GapResult res{Enclosure(kPrec), {}, cover.entries};
  sort_cover(res.sorted);
  const auto& v = res.sorted;
  std::vector<Rational> lo, hi;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    lo.push_back(v[i + 1].right.lo - v[i].left.hi);
    hi.push_back(v[i + 1].right.hi - v[i].left.lo);
  }
  const Rational best_lo = *std::max_element(lo.begin(), lo.end());
  const Rational best_hi = *std::max_element(hi.begin(), hi.end());
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (hi[i] >= best_lo) res.extremal.push_back(i);
  }
  res.value = Enclosure::hull(best_lo, best_hi, kPrec);
  return res;
}

GapResult cover_min_gap(const CoverSystem& cover) {
  GapResult res{Enclosure(kPrec), {}, cover.entries};
  sort_cover(res.sorted);
  const auto& v = res.sorted;
  std::vector<Rational> lo, hi;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    lo.push_back(v[i].right.lo - v[i + 1].left.hi);
    hi.push_back(v[i].right.hi - v[i + 1].left.lo);
  }
  const Rational best_lo = *std::min_element(lo.begin(), lo.end());
  const Rational best_hi = *std::min_element(hi.begin(), hi.end());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] <= best_hi) res.extremal.push_back(i);
  }
  res.value = Enclosure::hull(best_lo, best_hi, kPrec);
  return res;
}

Enclosure cover_gap_mod1(const std::vector<ObstructionRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::InvalidInput, "no records");
  struct Shifted {
    RatInterval a, b;
  };
  std::vector<Shifted> base;
  for (const auto& r : records) {
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), r.min_root.interval.lo.get_num_mpz_t(), r.min_root.interval.lo.get_den_mpz_t());
    base.push_back({r.min_root.interval.translated(-Rational(k)), r.max_root.interval.translated(-Rational(k))});
  }
  // For a start a_j, any interval [u, u + l] with a_j <= u below the next
  // start contains every entry that certainly starts after a_j and ends by
  // u + l; copies shifted by +1 and +2 cover the wrap-around.
  std::optional<Rational> worst_lo, worst_hi;
  for (const auto& j : base) {
    std::optional<Rational> best_lo, best_hi;
    for (int shift = 0; shift <= 2; ++shift) {
      for (const auto& i : base) {
        const RatInterval a = i.a.translated(shift);
        const RatInterval b = i.b.translated(shift);
        if (!(a.lo > j.a.hi)) continue;
        const Rational glo = b.lo - j.a.hi;
        const Rational ghi = b.hi - j.a.lo;
        if (!best_hi || ghi < *best_hi) best_hi = ghi;
        if (!best_lo || glo < *best_lo) best_lo = glo;
      }
    }
    if (!worst_hi || *best_hi > *worst_hi) worst_hi = best_hi;
    if (!worst_lo || *best_lo > *worst_lo) worst_lo = best_lo;
  }
  return Enclosure::hull(std::min(*worst_lo, *worst_hi), *worst_hi, kPrec);
}

Enclosure lplus_lower(const CertifiedProduct& product) {
  if (product.certificate.resultants.size() !=
      product.product.factors.size() * (1 + product.certificate.also_attaining.size())) {
    throw Error(ErrorKind::NotCertified, "product carries no certificate");
  }
  return Enclosure::exact(product.interval.width(), kPrec);
}

Enclosure alpha_max(mpfr_prec_t prec) {
  return log(Enclosure::exact(4L, prec)) / log(Enclosure::exact(5L, prec));
}

Enclosure alpha_star() {
  Rational lo(1, 100), hi(1, 2);
  const Rational width(1, 1000000000);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const Enclosure h = h_alpha(mid);
    if (h.certainly_positive()) {
      lo = mid;
    } else if (h.certainly_negative()) {
      hi = mid;
    } else {
      break;
    }
  }
  return Enclosure::hull(lo, hi, kPrec);
}

Enclosure ell_alpha(const Rational& alpha) {
  if (alpha < 0 || !alpha_max(kPrec).certainly_at_least(alpha)) {
    throw Error(ErrorKind::AlphaOutOfRange, to_string(alpha) + " is outside [0, ln4/ln5]");
  }
  const Enclosure h = h_alpha(alpha);
  if (h.contains_zero()) throw Error(ErrorKind::Undecided, "alpha too close to alpha*");
  Rational lo, hi;
  if (!h.certainly_negative()) {
    // G increases on (1, sqrt(5 - 4 alpha)) up to h(alpha) >= 0.
    lo = 1;
    hi = sqrt_approx(5 - 4 * alpha, false);
    if (!g_alpha(alpha, hi).certainly_positive()) hi = sqrt_approx(5 - 4 * alpha, true);
  } else {
    // G increases from -inf on (sqrt 5, inf).
    lo = sqrt_approx(5, true);
    if (lo * lo == 5) lo += Rational(1, 1000000000);
    hi = 4;
    while (!g_alpha(alpha, hi).certainly_positive()) hi *= 2;
  }
  const Rational width(1, Integer("1000000000000"));
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const Enclosure g = g_alpha(alpha, mid);
    if (g.certainly_negative()) {
      lo = mid;
    } else if (g.certainly_positive()) {
      hi = mid;
    } else {
      break;
    }
  }
  return Enclosure::hull(lo, hi, kPrec);
}

std::vector<Rational> default_grid(const std::vector<Rational>& extra) {
  std::vector<Rational> g;
  for (int i = 50; i <= 100; ++i) {
    Rational t(i, 100);
    t.canonicalize();
    g.push_back(t);
  }
  g.insert(g.end(), extra.begin(), extra.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::vector<BoundPoint> envelope(const std::vector<Rational>& grid_in, const EnvelopeInputs& in) {
  std::vector<Rational> grid(grid_in);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const Rational alpha_cap = floor_to(alpha_max(kPrec).lower(), 1000000);
  const Rational half(1, 2);

  // Raw bounds as rationals: lower bounds rounded down, upper bounds up.
  struct Raw {
    std::optional<Rational> mlo, mhi, plo, phi;
  };
  std::vector<Raw> raw(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const Rational& t = grid[g];
    if (t < 0) throw Error(ErrorKind::InvalidInput, "negative t");
    Raw& r = raw[g];
    if (t >= 1) {
      r.mlo = r.mhi = r.plo = r.phi = 4 * t;
      continue;
    }
    r.mhi = 4 * t;
    r.phi = 4 * t;
    std::vector<ObstructionRecord> above;
    for (const auto& rec : in.records) {
      if (!rec.value.exceeds(t)) continue;
      above.push_back(rec);
      r.mhi = std::min(*r.mhi, rec.span.upper());
    }
    if (!above.empty()) r.phi = std::min(*r.phi, cover_gap_mod1(above).upper());

    r.plo = t <= half ? 2 * t : Rational(0);
    for (const auto& p : in.products) {
      if (p.sup_value.compare(t) <= 0) r.plo = std::max(*r.plo, lplus_lower(p).lower());
    }
    if (t >= half) {
      // alpha(t) = 2 ln(2t) / ln 5, rounded down to a rational alpha' with
      // 5^(alpha'/2)/2 <= t.
      const Enclosure a = exact(2) * log(exact(2 * t)) / log(exact(5));
      Rational ap = std::min(floor_to(std::max(a.lower(), Rational(0)), 1000000), alpha_cap);
      try {
        r.plo = std::max(*r.plo, ell_alpha(ap).lower());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Undecided) throw;
      }
    }
    if (t < half) {
      r.mlo = r.mhi = Rational(0);
    } else {
      r.mlo = std::max(Rational(0), Rational(*r.plo - 1));
      if (in.lminus_half) r.mlo = std::max(*r.mlo, *in.lminus_half);
    }
  }
  // Both functions are nondecreasing: carry lower bounds right, upper left.
  for (std::size_t g = 1; g < raw.size(); ++g) {
    raw[g].mlo = std::max(*raw[g].mlo, *raw[g - 1].mlo);
    raw[g].plo = std::max(*raw[g].plo, *raw[g - 1].plo);
  }
  for (std::size_t g = raw.size(); g-- > 1;) {
    raw[g - 1].mhi = std::min(*raw[g - 1].mhi, *raw[g].mhi);
    raw[g - 1].phi = std::min(*raw[g - 1].phi, *raw[g].phi);
  }
  // L- <= L+.
  std::vector<BoundPoint> out;
  for (std::size_t g = 0; g < raw.size(); ++g) {
    Raw& r = raw[g];
    r.mhi = std::min(*r.mhi, *r.phi);
    r.plo = std::max(*r.plo, *r.mlo);
    out.push_back({grid[g], exact(*r.mlo), exact(*r.mhi), exact(*r.plo), exact(*r.phi)});
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BoundPoint>& points) {
  out << "t,lminus_lo,lminus_hi,lplus_lo,lplus_hi\n";
  auto down = [](const std::optional<Enclosure>& e) { return e ? format_down(*e, 10) : std::string(); };
  auto up = [](const std::optional<Enclosure>& e) { return e ? format_up(*e, 10) : std::string(); };
  for (const auto& p : points) {
    out << format_down(exact(p.t), 10) << ',' << down(p.lminus_lo) << ',' << up(p.lminus_hi) << ','
        << down(p.lplus_lo) << ',' << up(p.lplus_hi) << '\n';
  }
}

bool length_one_value_is_half(const RatInterval& I, const Rational& m) {
  return I.width() >= 1 && I.width() < m;
}

}  // namespace intcheb
