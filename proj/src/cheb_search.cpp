#include "intcheb/cheb_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "intcheb/error.hpp"
#include "intcheb/factor.hpp"
#include "intcheb/simplex.hpp"

namespace intcheb {

namespace {

IntPoly monic_sign(const IntPoly& p) { return p.lead() < 0 ? -p : p; }

Rational dyadic_eps(mpfr_prec_t bits) {
  Rational eps(1);
  mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return eps;
}

double horner(const IntPoly& p, double x) {
  double acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[i].get_d();
  return acc;
}

// Midpoints (as doubles) of the real roots of p in I, refined to ~1e-15.
std::vector<double> real_roots_double(const IntPoly& p, const RatInterval& I) {
  std::vector<double> out;
  if (p.degree() < 1) return out;
  for (const RootBox& b : isolate_roots_in(p, I)) out.push_back(refine(b, dyadic_eps(52)).interval.mid().get_d());
  return out;
}

// Upper bound of F - log m at a point, by precision escalation.
double certify_below(const WeightedProduct& p, RootBox box, const ObstructionValue& m, const CertifyOptions& opt,
                     mpfr_prec_t& used, const std::string& where) {
  for (mpfr_prec_t prec = opt.start_precision; prec <= opt.max_precision; prec *= 2) {
    if (!box.is_exact()) box = refine(box, dyadic_eps(prec / 2 + 8));
    const Enclosure diff = log_potential(p, box.enclosure(prec)) - m.log_enclosure(prec);
    if (diff.certainly_negative()) {
      used = std::max(used, prec);
      return diff.upper_double();
    }
    if (diff.certainly_positive()) {
      throw Error(ErrorKind::SupExceedsM, "F exceeds log " + m.to_string() + " at " + where);
    }
  }
  throw Error(ErrorKind::StrictMaxUndecided, "could not separate F from log " + m.to_string() + " at " + where);
}

std::string box_label(const RootBox& b) {
  return "[" + std::to_string(b.interval.lo.get_d()) + ", " + std::to_string(b.interval.hi.get_d()) + "]";
}

}  // namespace

WeightedProduct WeightedProduct::from_exponents(const std::vector<std::pair<IntPoly, Integer>>& powers) {
  Integer total = 0;
  for (const auto& [f, e] : powers) {
    if (f.degree() < 1) throw Error(ErrorKind::InvalidInput, "product factors must be nonconstant");
    if (e < 0) throw Error(ErrorKind::InvalidInput, "exponents must be nonnegative");
    total += e * f.degree();
  }
  if (total == 0) throw Error(ErrorKind::InvalidInput, "product has degree zero");
  WeightedProduct out;
  for (const auto& [f, e] : powers) out.factors.push_back({f, Rational(e * f.degree(), total)});
  for (auto& wf : out.factors) wf.alpha.canonicalize();
  return out;
}

void WeightedProduct::validate() const {
  if (factors.empty()) throw Error(ErrorKind::InvalidInput, "empty product");
  Rational sum = 0;
  std::set<IntPoly> seen;
  for (const auto& wf : factors) {
    if (wf.alpha < 0) throw Error(ErrorKind::InvalidInput, "negative weight on " + to_string(wf.poly));
    if (!wf.poly.is_monic()) throw Error(ErrorKind::InvalidInput, to_string(wf.poly) + " is not monic");
    if (!is_irreducible(wf.poly)) throw Error(ErrorKind::InvalidInput, to_string(wf.poly) + " is not irreducible");
    if (!seen.insert(wf.poly).second) throw Error(ErrorKind::InvalidInput, "repeated factor " + to_string(wf.poly));
    sum += wf.alpha;
  }
  if (sum != 1) throw Error(ErrorKind::InvalidInput, "weights sum to " + to_string(sum) + ", not 1");
}

WeightedProduct WeightedProduct::support() const {
  WeightedProduct out;
  for (const auto& wf : factors) {
    if (wf.alpha != 0) out.factors.push_back(wf);
  }
  return out;
}

WeightedProduct WeightedProduct::reflected() const {
  WeightedProduct out;
  for (const auto& wf : factors) out.factors.push_back({monic_sign(reflect(wf.poly, 1)), wf.alpha});
  return out;
}

WeightedProduct WeightedProduct::translated(const Integer& k) const {
  WeightedProduct out;
  for (const auto& wf : factors) out.factors.push_back({translate(wf.poly, -k), wf.alpha});
  return out;
}

Enclosure log_potential(const WeightedProduct& p, const Enclosure& x) {
  const mpfr_prec_t prec = x.precision();
  Enclosure acc = Enclosure::exact(0L, prec);
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (p.factors[i].alpha == 0) continue;
    acc += Enclosure::exact(p.weight(i), prec) * log(abs(eval_ball(p.factors[i].poly, x)));
  }
  return acc;
}

CertifiedProduct CertifiedProduct::reflected() const {
  CertifiedProduct out{product.reflected(), interval.reflected(), primitive_part(reflect(q, 1)), sup_value,
                       certificate};
  for (auto& e : out.certificate.also_attaining) e = primitive_part(reflect(e, 1));
  out.certificate.derivation = "reflect(" + certificate.derivation + ")";
  return out;
}

CertifiedProduct CertifiedProduct::translated(const Integer& k) const {
  CertifiedProduct out{product.translated(k), interval.translated(Rational(k)), primitive_part(translate(q, -k)),
                       sup_value, certificate};
  for (auto& e : out.certificate.also_attaining) e = primitive_part(translate(e, -k));
  out.certificate.derivation = "translate " + k.get_str() + "(" + certificate.derivation + ")";
  return out;
}

RatMatrix gram_matrix(const RatInterval& I, int k) {
  if (I.width() <= 0) throw Error(ErrorKind::InvalidInput, "Gram matrix needs a nondegenerate interval");
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative degree");
  std::vector<Rational> moments(2 * k + 2);
  Rational hp = I.hi;
  Rational lp = I.lo;
  for (int m = 1; m <= 2 * k + 1; ++m) {
    moments[m] = (hp - lp) / m;
    hp *= I.hi;
    lp *= I.lo;
  }
  RatMatrix g(k + 1, std::vector<Rational>(k + 1));
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) g[i][j] = moments[i + j + 1];
  }
  g[k][k] += 1;
  return g;
}

CandidateSet lll_candidates(const RatInterval& I, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::InvalidInput, "k_max must be at least 1");
  CandidateSet out;
  std::set<IntPoly> found;
  for (int k = 1; k <= k_max; ++k) {
    const RatMatrix g = gram_matrix(I, k);
    const IntMatrix basis = lll_gram(g);
    std::vector<std::vector<Integer>> unit;
    std::vector<Rational> norms;
    // {-1,0,1} combinations of the reduced vectors; plain rows beyond k = 8.
    const int dim = k + 1;
    const bool combine = k <= 8;
    long total = 1;
    for (int i = 0; i < dim && combine; ++i) total *= 3;
    if (!combine) total = 0;
    auto consider = [&](const std::vector<Integer>& v) {
      if (abs(v[k]) != 1) return;
      unit.push_back(v);
      norms.push_back(quadratic_form(g, v, v));
    };
    if (combine) {
      for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<Integer> v(dim, 0);
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
          const int coef = static_cast<int>(c % 3) - 1;
          c /= 3;
          if (coef == 0) continue;
          nonzero = true;
          for (int j = 0; j < dim; ++j) v[j] += coef * basis[i][j];
        }
        if (nonzero) consider(v);
      }
    } else {
      for (const auto& row : basis) consider(row);
    }
    if (unit.empty()) {
      out.no_monic_degrees.push_back(k);
      continue;
    }
    const Rational least = *std::min_element(norms.begin(), norms.end());
    for (std::size_t i = 0; i < unit.size(); ++i) {
      if (norms[i] > 2 * least) continue;
      const IntPoly p = monic_sign(IntPoly(unit[i]));
      for (const auto& sf : factor(p).factors) {
        if (sf.factor.degree() >= 1 && sf.factor.is_monic()) found.insert(sf.factor);
      }
    }
  }
  out.factors.assign(found.begin(), found.end());
  return out;
}

std::vector<IntPoly> filter_factors(const std::vector<IntPoly>& candidates, const IntPoly& q) {
  std::vector<IntPoly> out;
  for (const auto& f : candidates) {
    if (abs(resultant(f, q)) == 1) out.push_back(f);
  }
  return out;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "cannot rationalize a non-finite value");
  if (max_den < 1) throw Error(ErrorKind::InvalidInput, "denominator bound must be positive");
  const Rational exact(x);
  if (exact.get_den() <= max_den) return exact;
  // Continued fraction convergents, then the best semiconvergent.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = exact.get_num(), d = exact.get_den();
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const Integer q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Integer r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  Integer k = (Integer(max_den) - q0) / q1;
  Rational b1(p0 + k * p1, q0 + k * q1);
  Rational b2(p1, q1);
  b1.canonicalize();
  b2.canonicalize();
  return abs(b2 - exact) <= abs(b1 - exact) ? b2 : b1;
}

WeightResult optimize_weights(const std::vector<IntPoly>& factors, const RatInterval& I,
                              const std::optional<IntPoly>& q, const WeightOptions& opt) {
  const int k = static_cast<int>(factors.size());
  if (k == 0) throw Error(ErrorKind::InvalidInput, "no factors");
  if (I.width() <= 0) throw Error(ErrorKind::InvalidInput, "degenerate interval");
  for (const auto& f : factors) {
    if (f.degree() < 1) throw Error(ErrorKind::InvalidInput, "constant factor");
  }
  const int n_samples = std::max(opt.samples_per_factor * k, 10 * k);

  std::vector<double> poles;
  for (const auto& f : factors) {
    for (double r : real_roots_double(f, I)) poles.push_back(r);
  }
  std::vector<double> betas;
  if (q) {
    for (const RootBox& box : isolate_roots(*q)) betas.push_back(refine(box, dyadic_eps(52)).interval.mid().get_d());
  }

  const double lo = I.lo.get_d();
  const double hi = I.hi.get_d();
  std::vector<double> xs{lo, hi};
  for (int j = 0; j < n_samples; ++j) {
    xs.push_back((lo + hi) / 2 + (hi - lo) / 2 * std::cos(std::numbers::pi * (j + 0.5) / n_samples));
  }
  for (double b : betas) {
    if (b >= lo && b <= hi) xs.push_back(b);
  }
  std::vector<std::vector<double>> rows_f;
  for (double x : xs) {
    bool near_pole = false;
    for (double r : poles) near_pole = near_pole || std::abs(x - r) < opt.guard_band;
    if (near_pole) continue;
    std::vector<double> row;
    for (const auto& f : factors) row.push_back(std::log(std::abs(horner(f, x))) / f.degree());
    rows_f.push_back(std::move(row));
  }

  // Variables alpha_1..alpha_k, t+, t-.
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  auto add = [&](std::vector<double> coeffs, double t_coeff, double rhs) {
    coeffs.push_back(t_coeff);
    coeffs.push_back(-t_coeff);
    A.push_back(std::move(coeffs));
    b.push_back(rhs);
  };
  auto add_equality = [&](const std::vector<double>& coeffs, double rhs, double tol) {
    add(coeffs, 0, rhs + tol);
    std::vector<double> neg(coeffs);
    for (auto& v : neg) v = -v;
    add(neg, 0, -rhs + tol);
  };
  for (const auto& row : rows_f) add(row, -1, 0);
  add_equality(std::vector<double>(k, 1.0), 1.0, 0.0);

  std::vector<std::vector<double>> grads;
  if (q) {
    for (const RootBox& box : isolate_roots(*q)) {
      const RootBox fine = refine(box, dyadic_eps(200));
      const Enclosure beta = fine.enclosure(256);
      std::vector<double> g;
      for (const auto& f : factors) {
        const Enclosure val = eval_ball(derivative(f), beta) / eval_ball(f, beta);
        g.push_back(val.mid_double() / f.degree());
      }
      double scale = 0;
      for (double v : g) scale = std::max(scale, std::abs(v));
      if (scale > 0) {
        for (auto& v : g) v /= scale;
      }
      add_equality(g, 0.0, opt.equality_tolerance);
      grads.push_back(std::move(g));
    }
    if (!opt.relations.empty()) {
      // (1/d, alpha_i / deg f_i) must lie in the span of the relations: it is
      // orthogonal to every kernel vector of the relation matrix.
      const int d = q->degree();
      std::vector<std::vector<Rational>> rel;
      for (const auto& r : opt.relations) rel.emplace_back(r.exponents.begin(), r.exponents.end());
      const int cols = k + 1;
      // Reduced row echelon form to read off a kernel basis.
      std::vector<int> pivots;
      int rank = 0;
      for (int c = 0; c < cols && rank < static_cast<int>(rel.size()); ++c) {
        int piv = rank;
        while (piv < static_cast<int>(rel.size()) && rel[piv][c] == 0) ++piv;
        if (piv == static_cast<int>(rel.size())) continue;
        std::swap(rel[piv], rel[rank]);
        const Rational inv = 1 / rel[rank][c];
        for (auto& v : rel[rank]) v *= inv;
        for (int i = 0; i < static_cast<int>(rel.size()); ++i) {
          if (i == rank || rel[i][c] == 0) continue;
          const Rational f = rel[i][c];
          for (int j = 0; j < cols; ++j) rel[i][j] -= f * rel[rank][j];
        }
        pivots.push_back(c);
        ++rank;
      }
      for (int free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> z(cols, 0);
        z[free] = 1;
        for (int r = 0; r < rank; ++r) z[pivots[r]] = -rel[r][free];
        std::vector<double> coeffs;
        for (int i = 0; i < k; ++i) coeffs.push_back(z[i + 1].get_d() / factors[i].degree());
        add_equality(coeffs, -z[0].get_d() / d, opt.equality_tolerance);
      }
    }
  }

  std::vector<double> c(k, 0.0);
  c.push_back(-1.0);
  c.push_back(1.0);
  const LpResult lp = simplex_maximize(A, b, c);
  if (lp.status == LpResult::Status::Infeasible) throw Error(ErrorKind::Infeasible, "weight program is infeasible");
  if (lp.status == LpResult::Status::Unbounded) {
    throw Error(ErrorKind::UnboundedBelow, "weight program is unbounded; the factor set is degenerate");
  }

  WeightResult res;
  Rational sum = 0;
  for (int i = 0; i < k; ++i) {
    res.alphas.push_back(rationalize(std::max(0.0, lp.x[i]), opt.max_denominator));
    sum += res.alphas.back();
  }
  if (sum == 0) throw Error(ErrorKind::Infeasible, "all weights rounded to zero");
  for (auto& a : res.alphas) a /= sum;

  for (const auto& g : grads) {
    double s = 0;
    for (int i = 0; i < k; ++i) s += g[i] * res.alphas[i].get_d();
    if (std::abs(s) > 1e-6) throw Error(ErrorKind::Infeasible, "rounded weights violate a critical-point constraint");
  }
  res.t = -HUGE_VAL;
  for (const auto& row : rows_f) {
    double s = 0;
    for (int i = 0; i < k; ++i) s += row[i] * res.alphas[i].get_d();
    res.t = std::max(res.t, s);
  }
  return res;
}

IntPoly critical_numerator(const WeightedProduct& p) {
  const std::size_t k = p.factors.size();
  if (k == 0) throw Error(ErrorKind::InvalidInput, "empty product");
  Integer den = 1;
  for (std::size_t i = 0; i < k; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.weight(i).get_den_mpz_t());
  std::vector<IntPoly> prefix(k + 1, IntPoly::constant(1));
  std::vector<IntPoly> suffix(k + 1, IntPoly::constant(1));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * p.factors[i].poly;
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * p.factors[i].poly;
  IntPoly n;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational w = p.weight(i) * den;
    if (w == 0) continue;
    n = n + derivative(p.factors[i].poly) * prefix[i] * suffix[i + 1] * w.get_num();
  }
  if (n.is_zero()) throw Error(ErrorKind::InvalidInput, "critical numerator vanishes identically");
  return primitive_part(n);
}

CertifiedProduct certify_attainment(const WeightedProduct& product, const RatInterval& I, const IntPoly& q_in,
                                    const CertifyOptions& opt) {
  const WeightedProduct p = product.support();
  p.validate();
  if (q_in.degree() < 1) throw Error(ErrorKind::InvalidInput, "Q must be nonconstant");
  const IntPoly q = primitive_part(q_in);
  if (q.lead() < 2) throw Error(ErrorKind::InvalidInput, "Q must be nonmonic");
  if (!is_irreducible(q)) throw Error(ErrorKind::InvalidInput, to_string(q) + " is not irreducible");
  if (!all_roots_in(q, I)) throw Error(ErrorKind::InvalidInput, "roots of " + to_string(q) + " are not all in I");
  const ObstructionValue m = ObstructionValue::of(q);
  CertificateRecord cert;
  std::vector<IntPoly> attaining{q};
  for (const IntPoly& extra : opt.also_attaining) {
    const IntPoly e = primitive_part(extra);
    if (!is_irreducible(e) || !all_roots_in(e, I) || ObstructionValue::of(e) != m || e == q) {
      throw Error(ErrorKind::InvalidInput, to_string(e) + " is not a further obstruction of the same value in I");
    }
    attaining.push_back(e);
    cert.also_attaining.push_back(e);
  }

  // 1. unit resultants
  for (const IntPoly& qq : attaining) {
    for (const auto& wf : p.factors) {
      const Integer r = resultant(wf.poly, qq);
      cert.resultants.push_back(r);
      if (abs(r) != 1) {
        throw Error(ErrorKind::ResultantFailed, "Res(" + to_string(wf.poly) + ", " + to_string(qq) + ") = " + r.get_str());
      }
    }
  }

  // 2. the roots of Q are critical points, unless Q is linear with its root
  // at an endpoint of I, where the maximum may sit on the boundary.
  IntPoly n = critical_numerator(p);
  IntPoly quot;
  for (const IntPoly& qq : attaining) {
    const bool at_endpoint = qq.degree() == 1 && (sign_at(qq, I.lo) == 0 || sign_at(qq, I.hi) == 0);
    if (!divides(qq, n, &quot)) {
      if (at_endpoint) continue;
      throw Error(ErrorKind::NotCritical, to_string(qq) + " does not divide the numerator");
    }
    n = quot;
    while (n.degree() >= qq.degree() && divides(qq, n, &quot)) n = quot;
  }

  // 3. strict inequality elsewhere
  mpfr_prec_t used = opt.start_precision;
  if (n.degree() >= 1) {
    for (const RootBox& box : isolate_roots_in(n, I)) {
      const double margin = certify_below(p, box, m, opt, used, "critical point " + box_label(box));
      cert.critical_margins.emplace_back(box.interval, margin);
    }
  }
  for (const Rational& e : {I.lo, I.hi}) {
    bool is_root = false;
    for (const IntPoly& qq : attaining) is_root = is_root || sign_at(qq, e) == 0;
    if (is_root) continue;
    if (!cert.endpoint_margins.empty() && cert.endpoint_margins.back().first == e) continue;
    RootBox point{RatInterval(e, e), IntPoly::linear(e.get_den(), -e.get_num()), 0, 0};
    cert.endpoint_margins.emplace_back(e, certify_below(p, point, m, opt, used, "endpoint " + to_string(e)));
  }

  // 4. F = log m at the roots of Q
  for (const IntPoly& qq : attaining) {
    if (qq.degree() < 2) continue;
    std::vector<IntPoly> fs;
    for (const auto& wf : p.factors) fs.push_back(wf.poly);
    const auto relations = find_relations(fs, qq, isolate_roots(qq), opt.relation_precision);
    cert.relations.insert(cert.relations.end(), relations.begin(), relations.end());
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : relations) {
      if (r.exact) rows.emplace_back(r.exponents.begin(), r.exponents.end());
    }
    std::vector<Rational> target{Rational(1, qq.degree())};
    for (std::size_t i = 0; i < p.factors.size(); ++i) target.push_back(p.weight(i));
    if (rows.empty() || !in_rational_span(rows, target)) {
      throw Error(ErrorKind::NotCertified, "could not establish F = log m at the roots of " + to_string(qq));
    }
  }
  cert.max_precision = used;
  return {p, I, q, m, cert};
}

std::vector<Relation> relation_basis(const std::vector<IntPoly>& factors, const IntPoly& q, const RootBox& beta,
                                     mpfr_prec_t prec) {
  return find_relations(factors, q, {beta}, prec);
}

Enclosure log_sup_bound(const WeightedProduct& p, const RatInterval& I, mpfr_prec_t prec) {
  const IntPoly n = critical_numerator(p);
  std::vector<RootBox> points;
  if (n.degree() >= 1) {
    for (const RootBox& b : isolate_roots_in(n, I)) points.push_back(refine(b, dyadic_eps(prec / 2 + 8)));
  }
  for (const Rational& e : {I.lo, I.hi}) {
    points.push_back({RatInterval(e, e), IntPoly::linear(e.get_den(), -e.get_num()), 0, 0});
  }
  // Upper: the largest upper bound over the candidates. Lower: the largest
  // lower bound, a value of F attained somewhere in I.
  std::optional<Rational> upper, lower;
  for (const RootBox& b : points) {
    const Enclosure v = log_potential(p, b.enclosure(prec));
    if (mpfr_inf_p(v.sup())) continue;  // F = -inf at a root of a factor
    if (!upper || v.upper() > *upper) upper = v.upper();
    if (!mpfr_inf_p(v.inf()) && (!lower || v.lower() > *lower)) lower = v.lower();
  }
  if (!upper) throw Error(ErrorKind::InvalidInput, "F is -inf at every candidate point");
  if (!lower) throw Error(ErrorKind::Undecided, "no finite lower bound for sup F");
  return Enclosure::hull(*lower, *upper, prec);
}

namespace {

// Bisects between inner (F < log m) and outer (F > log m) points.
Rational crossing(const WeightedProduct& p, const Enclosure& log_m, Rational inner, Rational outer,
                  const Rational& width, mpfr_prec_t prec) {
  while (abs(outer - inner) > width) {
    const Rational mid = (inner + outer) / 2;
    const Enclosure g = log_potential(p, Enclosure::exact(mid, prec)) - log_m;
    if (g.certainly_negative()) {
      inner = mid;
    } else if (g.certainly_positive()) {
      outer = mid;
    } else {
      break;
    }
  }
  return inner;
}

Rational round_decimal(const Rational& x, int digits, bool up) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational y = x * scale;
  Integer n;
  if (up) {
    mpz_cdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  } else {
    mpz_fdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  }
  Rational out(n, scale);
  out.canonicalize();
  return out;
}

}  // namespace

RatInterval refine_endpoints(const WeightedProduct& p, const RatInterval& approx, const ObstructionValue& m, int digits,
                             const Rational& window, mpfr_prec_t prec) {
  const Enclosure log_m = m.log_enclosure(prec);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  const Rational width(1, scale);
  auto side = [&](const Rational& e, int dir) {
    const Rational inner = e - dir * window;
    const Rational outer = e + dir * window;
    const Enclosure gi = log_potential(p, Enclosure::exact(inner, prec)) - log_m;
    const Enclosure go = log_potential(p, Enclosure::exact(outer, prec)) - log_m;
    if (!gi.certainly_negative() || !go.certainly_positive()) {
      throw Error(ErrorKind::Undecided, "no sign change of F - log m near " + to_string(e));
    }
    return crossing(p, log_m, inner, outer, width, prec);
  };
  const Rational lo = round_decimal(side(approx.lo, -1), digits, true);
  const Rational hi = round_decimal(side(approx.hi, 1), digits, false);
  if (lo >= hi) throw Error(ErrorKind::InvalidInput, "refined interval is empty");
  return {lo, hi};
}

}  // namespace intcheb
