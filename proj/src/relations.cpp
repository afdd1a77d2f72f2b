#include "intcheb/relations.hpp"

#include "intcheb/error.hpp"
#include "intcheb/lll.hpp"

namespace intcheb {

namespace {

using RatPoly = std::vector<Rational>;

// Arithmetic in Q[x]/(q), elements stored as d rational coefficients.
class Quotient {
 public:
  explicit Quotient(const IntPoly& q) : q_(q), d_(q.degree()) {}

  RatPoly from(const IntPoly& p) const {
    RatPoly r(p.coeffs().begin(), p.coeffs().end());
    return reduce(std::move(r));
  }
  RatPoly one() const {
    RatPoly r(d_, 0);
    r[0] = 1;
    return r;
  }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const {
    RatPoly r(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d_; ++j) r[i + j] += a[i] * b[j];
    }
    return reduce(std::move(r));
  }
  RatPoly pow(RatPoly base, Integer e) const {
    RatPoly acc = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return acc;
  }

 private:
  RatPoly reduce(RatPoly r) const {
    const Rational lead(q_.lead());
    for (int k = static_cast<int>(r.size()) - 1; k >= d_; --k) {
      if (r[k] == 0) continue;
      const Rational f = r[k] / lead;
      for (int i = 0; i <= d_; ++i) r[k - d_ + i] -= f * Rational(q_.coeffs()[i]);
    }
    r.resize(d_, 0);
    return r;
  }
  IntPoly q_;
  int d_;
};

constexpr unsigned long kMaxExactWork = 200000;

}  // namespace

bool verify_relation_exact(const std::vector<IntPoly>& factors, const IntPoly& q, const std::vector<Integer>& exponents) {
  if (exponents.size() != factors.size() + 1) throw Error(ErrorKind::InvalidInput, "relation has the wrong length");
  if (q.degree() < 1) throw Error(ErrorKind::InvalidInput, "relation modulus must be nonconstant");
  Integer work = abs(exponents[0]);
  for (std::size_t i = 0; i < factors.size(); ++i) work += abs(exponents[i + 1]) * factors[i].degree();
  if (work > kMaxExactWork) return false;

  Quotient K(q);
  RatPoly lhs = K.one();
  RatPoly rhs = K.one();
  const Integer& a = exponents[0];
  Rational scalar = 1;
  if (a != 0) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), Integer(abs(q.lead())).get_mpz_t(), Integer(abs(a)).get_ui());
    scalar = a > 0 ? Rational(pw) : Rational(1, pw);
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Integer& e = exponents[i + 1];
    if (e == 0) continue;
    RatPoly v = K.pow(K.from(factors[i]), abs(e));
    if (e > 0) {
      lhs = K.mul(lhs, v);
    } else {
      rhs = K.mul(rhs, v);
    }
  }
  for (auto& c : lhs) c *= scalar;
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) plus = false;
    if (lhs[i] != -rhs[i]) minus = false;
  }
  return plus || minus;
}

std::vector<Relation> find_relations(const std::vector<IntPoly>& factors, const IntPoly& q,
                                     const std::vector<RootBox>& roots, mpfr_prec_t prec) {
  const std::size_t n = factors.size() + 1;
  const std::size_t r = roots.size();
  if (r == 0) return {};

  // logs[j][i] = log|g_i(beta_j)| with g_0 = a constant.
  auto logs_at = [&](mpfr_prec_t p) {
    Rational eps(1);
    mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), static_cast<mp_bitcnt_t>(p + 16));
    std::vector<std::vector<Enclosure>> out;
    for (const RootBox& box : roots) {
      const Enclosure beta = refine(box, eps).enclosure(p + 32);
      std::vector<Enclosure> row;
      row.push_back(log(Enclosure::exact(Rational(abs(q.lead())), p + 32)));
      for (const auto& f : factors) row.push_back(log(abs(eval_ball(f, beta))));
      out.push_back(std::move(row));
    }
    return out;
  };

  const auto logs = logs_at(prec);
  Rational scale(1);
  mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<mp_bitcnt_t>(prec / 2));
  IntMatrix lattice(n, std::vector<Integer>(n + r, 0));
  for (std::size_t i = 0; i < n; ++i) {
    lattice[i][i] = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (!logs[j][i].is_finite()) return {};
      Rational v = logs[j][i].center() * scale;
      Integer rounded;
      mpz_fdiv_q(rounded.get_mpz_t(), Integer(2 * v.get_num() + v.get_den()).get_mpz_t(),
                 Integer(2 * v.get_den()).get_mpz_t());
      lattice[i][n + j] = rounded;
    }
  }
  const IntMatrix reduced = lll_rows(lattice);

  const auto fine = logs_at(2 * prec);
  Rational tol(1);
  mpz_mul_2exp(tol.get_den_mpz_t(), tol.get_den_mpz_t(), static_cast<mp_bitcnt_t>(prec));
  std::vector<Relation> out;
  for (const auto& row : reduced) {
    Integer size = 1;
    for (std::size_t i = 0; i < n; ++i) size += abs(row[i]);
    bool small = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (abs(row[n + j]) > 4 * size) small = false;
    }
    if (!small) continue;
    bool holds = true;
    for (std::size_t j = 0; j < r && holds; ++j) {
      Enclosure s = Enclosure::exact(0L, 2 * prec + 32);
      for (std::size_t i = 0; i < n; ++i) {
        s += Enclosure::exact(Rational(row[i]), 2 * prec + 32) * fine[j][i];
      }
      holds = s.certainly_at_most(tol) && s.certainly_at_least(-tol);
    }
    if (!holds) continue;
    Relation rel;
    rel.exponents.assign(row.begin(), row.begin() + static_cast<long>(n));
    rel.exact = verify_relation_exact(factors, q, rel.exponents);
    out.push_back(std::move(rel));
  }
  return out;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool in_rational_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v) {
  auto extended = rows;
  extended.push_back(v);
  return rational_rank(rows) == rational_rank(extended);
}

}  // namespace intcheb
