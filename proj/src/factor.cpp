#include "intcheb/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p for a small odd prime p (< 2^31), low to high.

using ModPoly = std::vector<std::int64_t>;

struct Field {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1;
    std::int64_t base = norm(a);
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  void trim(ModPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  int deg(const ModPoly& f) const { return static_cast<int>(f.size()) - 1; }

  ModPoly reduce(const IntPoly& f) const {
    ModPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = static_cast<std::int64_t>(mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p)));
    }
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  ModPoly scale(const ModPoly& a, std::int64_t c) const {
    ModPoly r(a);
    for (auto& x : r) x = mul(x, norm(c));
    trim(r);
    return r;
  }

  ModPoly monic(const ModPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }

  // a = q b + r
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
    if (b.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero mod p");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const std::int64_t lead_inv = inv(b.back());
    while (deg(r) >= deg(b)) {
      const std::size_t shift = r.size() - b.size();
      const std::int64_t c = mul(r.back(), lead_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = norm(r[shift + i] - mul(c, b[i]));
      trim(r);
    }
    trim(q);
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  ModPoly quo(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divmod(a, b, q, r);
    return q;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s a + t b = gcd(a, b) (monic)
  ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      ModPoly q, r;
      divmod(r0, r1, q, r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::int64_t c = inv(r0.back());
    s = scale(s0, c);
    t = scale(t0, c);
    return scale(r0, c);
  }

  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], static_cast<std::int64_t>(i) % p);
    trim(r);
    return r;
  }

  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& f) const {
    ModPoly result = {1};
    base = rem(base, f);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), f);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), f);
    }
    return result;
  }
};

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x = {0, 1};
  ModPoly h = F.rem(x, f);
  int d = 0;
  while (F.deg(f) >= 2 * (d + 1)) {
    ++d;
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (F.deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (F.deg(f) > 0) out.emplace_back(f, F.deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic g whose irreducible
// factors all have degree d.
void equal_degree(const Field& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (F.deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(F.deg(g)));
    for (auto& c : a) c = coeff(rng);
    F.trim(a);
    if (F.deg(a) < 1) continue;
    ModPoly b = F.powmod(a, e, g);
    b = F.sub(b, ModPoly{1});
    ModPoly u = F.gcd(b, g);
    if (F.deg(u) > 0 && F.deg(u) < F.deg(g)) {
      equal_degree(F, u, d, rng, out);
      equal_degree(F, F.quo(g, u), d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of f mod p (f squarefree mod p, p not dividing lc).
std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& f) {
  std::mt19937_64 rng(0x5eed1234ULL + static_cast<std::uint64_t>(F.p));
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/MZ with big-integer coefficients in [0, M).

using ZPoly = std::vector<Integer>;

struct Ring {
  Integer m;

  void trim(ZPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  Integer norm(const Integer& a) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  ZPoly reduce(const ZPoly& a) const {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = norm(a[i]);
    trim(r);
    return r;
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(r);
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(r);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return reduce(r);
  }
  ZPoly scale(const ZPoly& a, const Integer& c) const {
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return reduce(r);
  }
  // Division by a monic b.
  void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (r.size() >= b.size() && !r.empty()) {
      const std::size_t shift = r.size() - b.size();
      Integer c = r.back();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) mpz_submul(r[shift + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
      r = reduce(r);
    }
    trim(q);
  }
  Integer inv(const Integer& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw Error(ErrorKind::InvalidInput, "non-invertible leading coefficient in Hensel lifting");
    }
    return r;
  }
};

ZPoly to_z(const ModPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Integer(static_cast<long>(f[i]));
  return r;
}

// One quadratic Hensel step from modulus m to m^2: f = g h, s g + t h = 1,
// h monic.
void hensel_step(const Integer& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
  Ring R{m * m};
  ZPoly e = R.sub(R.reduce(f), R.mul(g, h));
  ZPoly q, r;
  R.divmod_monic(R.mul(s, e), h, q, r);
  ZPoly g2 = R.add(R.add(g, R.mul(t, e)), R.mul(q, g));
  ZPoly h2 = R.add(h, r);
  ZPoly b = R.sub(R.add(R.mul(s, g2), R.mul(t, h2)), ZPoly{Integer(1)});
  ZPoly c, d;
  R.divmod_monic(R.mul(s, b), h2, c, d);
  ZPoly s2 = R.sub(s, d);
  ZPoly t2 = R.sub(R.sub(t, R.mul(t, b)), R.mul(c, g2));
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts the monic factorization f = lc(f) prod u_i (mod p) to modulus p^(2^steps).
std::vector<ZPoly> hensel_lift(const Field& F, const IntPoly& f, const std::vector<ModPoly>& u, int steps) {
  std::vector<ZPoly> lifted;
  ZPoly target(f.coeffs().begin(), f.coeffs().end());
  Integer modulus = F.p;
  for (int i = 0; i < steps; ++i) modulus *= modulus;
  Ring full{modulus};
  target = full.reduce(target);

  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const std::int64_t lc_mod = static_cast<std::int64_t>(mpz_fdiv_ui(target.back().get_mpz_t(), static_cast<unsigned long>(F.p)));
    ModPoly g0 = F.scale(u[i], lc_mod);
    ModPoly h0 = {1};
    for (std::size_t j = i + 1; j < u.size(); ++j) h0 = F.mul(h0, u[j]);
    ModPoly s0, t0;
    F.ext_gcd(g0, h0, s0, t0);
    // Normalize degrees: deg s < deg h, deg t < deg g.
    s0 = F.rem(s0, h0);
    t0 = F.quo(F.sub(ModPoly{1}, F.mul(s0, g0)), h0);
    ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
    Integer m = F.p;
    for (int k = 0; k < steps; ++k) {
      hensel_step(m, target, g, h, s, t);
      m *= m;
    }
    Integer lc_inv = full.inv(g.back());
    lifted.push_back(full.scale(g, lc_inv));
    target = h;
  }
  lifted.push_back(target);
  return lifted;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) r += 1;
  return r;
}

IntPoly symmetric_lift(const ZPoly& g, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i] > half ? g[i] - m : g[i];
  return IntPoly(std::move(v));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::int64_t kSmallPrimes[] = {
    3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,  67,  71,
    73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271,
    277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389,
    397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503,
    509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631,
    641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757,
    761, 769, 773, 787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883,
    887, 907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997};

constexpr int kPrimeTrials = 5;

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {p};

  // Pick the good prime giving the fewest modular factors.
  std::vector<ModPoly> best;
  std::int64_t best_p = 0;
  int trials = 0;
  for (std::int64_t prime : kSmallPrimes) {
    Field F{prime};
    if (mpz_fdiv_ui(p.lead().get_mpz_t(), static_cast<unsigned long>(prime)) == 0) continue;
    ModPoly fm = F.reduce(p);
    if (F.deg(F.gcd(fm, F.derivative(fm))) > 0) continue;
    std::vector<ModPoly> u = factor_mod_p(F, fm);
    if (best_p == 0 || u.size() < best.size()) {
      best = std::move(u);
      best_p = prime;
    }
    if (best.size() == 1 || ++trials == kPrimeTrials) break;
  }
  if (best_p == 0) throw Error(ErrorKind::InvalidInput, "no good prime found for " + to_string(p));
  if (best.size() == 1) return {p};

  Field F{best_p};
  // Coefficient bound for lc(p) * (any factor normalized to lead lc(p)).
  Integer norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  Integer bound = 2 * abs(p.lead()) * isqrt_ceil(norm2);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(p.degree()));
  int steps = 0;
  Integer modulus = best_p;
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted = hensel_lift(F, p, best, steps);
  Ring R{modulus};

  std::vector<IntPoly> out;
  IntPoly rest = p;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{R.norm(rest.lead())};
      for (std::size_t i : idx) g = R.mul(g, lifted[i]);
      IntPoly cand = primitive_part(symmetric_lift(g, modulus));
      IntPoly quotient;
      if (cand.degree() > 0 && divides(cand, rest, &quotient)) {
        out.push_back(cand);
        rest = quotient;
        for (std::size_t k = idx.size(); k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(primitive_part(rest));
  return out;
}

Factorization factor(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor of zero");
  Factorization result;
  result.content = content(p);
  if (p.lead() < 0) result.content = -result.content;
  if (p.degree() == 0) {
    result.content = p.lead();
    return result;
  }
  for (const auto& sf : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(sf.factor)) result.factors.push_back({g, sf.multiplicity});
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const SquarefreeFactor& a, const SquarefreeFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

IntPoly Factorization::expand() const {
  IntPoly r = IntPoly::constant(content);
  for (const auto& f : factors) r = r * pow(f.factor, static_cast<unsigned long>(f.multiplicity));
  return r;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  Factorization f = factor(p);
  return f.content == 1 && f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace intcheb
