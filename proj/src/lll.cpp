#include "intcheb/lll.hpp"

#include <utility>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

// Integral LLL after Cohen, "A Course in Computational Algebraic Number
// Theory", Algorithm 2.6.7, with 1-based indices for vectors.
class IntegralLll {
 public:
  explicit IntegralLll(const IntMatrix& gram) : g_(gram), n_(static_cast<int>(gram.size())) {
    h_.assign(n_ + 1, std::vector<Integer>(n_, 0));
    for (int i = 1; i <= n_; ++i) h_[i][i - 1] = 1;
    d_.assign(n_ + 1, 0);
    lambda_.assign(n_ + 1, std::vector<Integer>(n_ + 1, 0));
  }

  IntMatrix run() {
    if (n_ == 0) return {};
    d_[0] = 1;
    d_[1] = inner(1, 1);
    if (d_[1] <= 0) throw Error(ErrorKind::InvalidInput, "Gram matrix is not positive definite");
    int k = 2;
    int kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (int j = 1; j <= k; ++j) {
          Integer u = inner(k, j);
          for (int i = 1; i < j; ++i) {
            u = d_[i] * u - lambda_[k][i] * lambda_[j][i];
            mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
          }
          if (j < k) {
            lambda_[k][j] = u;
          } else {
            if (u <= 0) throw Error(ErrorKind::InvalidInput, "Gram matrix is not positive definite");
            d_[k] = u;
          }
        }
      }
      reduce(k, k - 1);
      const Integer& l = lambda_[k][k - 1];
      if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * l * l) {
        swap(k, kmax);
        k = std::max(2, k - 1);
      } else {
        for (int i = k - 2; i >= 1; --i) reduce(k, i);
        ++k;
      }
    }
    return IntMatrix(h_.begin() + 1, h_.end());
  }

 private:
  Integer inner(int a, int b) const {
    Integer s = 0;
    for (int i = 0; i < n_; ++i) {
      if (h_[a][i] == 0) continue;
      Integer row = 0;
      for (int j = 0; j < n_; ++j) row += g_[i][j] * h_[b][j];
      s += h_[a][i] * row;
    }
    return s;
  }

  void reduce(int k, int l) {
    Integer& lam = lambda_[k][l];
    if (2 * abs(lam) <= d_[l]) return;
    // q = nearest integer to lam / d_l
    Integer q = 2 * lam + d_[l];
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), Integer(2 * d_[l]).get_mpz_t());
    for (int i = 0; i < n_; ++i) h_[k][i] -= q * h_[l][i];
    lam -= q * d_[l];
    for (int i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(int k, int kmax) {
    std::swap(h_[k], h_[k - 1]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Integer lam = lambda_[k][k - 1];
    Integer b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (int i = k + 1; i <= kmax; ++i) {
      const Integer t = lambda_[i][k];
      Integer a = d_[k] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d_[k - 1].get_mpz_t());
      lambda_[i][k] = a;
      Integer c = b * t + lam * lambda_[i][k];
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d_[k].get_mpz_t());
      lambda_[i][k - 1] = c;
    }
    d_[k - 1] = b;
  }

  const IntMatrix& g_;
  int n_;
  IntMatrix h_;
  std::vector<Integer> d_;
  IntMatrix lambda_;
};

}  // namespace

IntMatrix lll_gram(const IntMatrix& gram) {
  for (const auto& row : gram) {
    if (row.size() != gram.size()) throw Error(ErrorKind::InvalidInput, "Gram matrix must be square");
  }
  return IntegralLll(gram).run();
}

IntMatrix lll_gram(const RatMatrix& gram) {
  Integer den = 1;
  for (const auto& row : gram) {
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntMatrix g(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (const auto& x : gram[i]) {
      Rational scaled = x * den;
      g[i].push_back(scaled.get_num());
    }
  }
  return lll_gram(g);
}

IntMatrix lll_rows(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  IntMatrix gram(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < rows[i].size(); ++c) s += rows[i][c] * rows[j][c];
      gram[i][j] = gram[j][i] = s;
    }
  }
  IntMatrix h = lll_gram(gram);
  IntMatrix out(n, std::vector<Integer>(n ? rows[0].size() : 0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (h[i][j] == 0) continue;
      for (std::size_t c = 0; c < rows[j].size(); ++c) out[i][c] += h[i][j] * rows[j][c];
    }
  }
  return out;
}

Rational quadratic_form(const RatMatrix& gram, const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i]) * gram[i][j] * Rational(y[j]);
  }
  return s;
}

}  // namespace intcheb
