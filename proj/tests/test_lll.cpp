#include <gtest/gtest.h>

#include <random>

#include "intcheb/error.hpp"
#include "intcheb/lll.hpp"

using namespace intcheb;

namespace {

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gram-Schmidt in exact rationals; returns squared norms and mu.
void gram_schmidt(const IntMatrix& b, std::vector<Rational>& norms, std::vector<std::vector<Rational>>& mu) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> star(n);
  norms.assign(n, 0);
  mu.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational d = 0;
      for (std::size_t k = 0; k < b[i].size(); ++k) d += Rational(b[i][k]) * star[j][k];
      mu[i][j] = d / norms[j];
      for (std::size_t k = 0; k < b[i].size(); ++k) star[i][k] -= mu[i][j] * star[j][k];
    }
    for (const auto& x : star[i]) norms[i] += x * x;
  }
}

// Size reduction and the Lovasz condition with delta = 3/4.
bool is_lll_reduced(const IntMatrix& b) {
  std::vector<Rational> norms;
  std::vector<std::vector<Rational>> mu;
  gram_schmidt(b, norms, mu);
  for (std::size_t i = 1; i < b.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(mu[i][j]) > Rational(1, 2)) return false;
    }
    if (norms[i] < (Rational(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) return false;
  }
  return true;
}

Integer det(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  Integer prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TEST(Lll, ClassicExample) {
  IntMatrix b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  IntMatrix r = lll_rows(b);
  EXPECT_TRUE(is_lll_reduced(r));
  EXPECT_EQ(abs(det(r)), abs(det(b)));
  // Known reduction: (0,1,0), (1,0,1), (-1,0,2).
  EXPECT_EQ(dot(r[0], r[0]), 1);
  EXPECT_EQ(dot(r[1], r[1]), 2);
}

TEST(Lll, RandomBasesAreReducedAndUnimodular) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    IntMatrix b(n, std::vector<Integer>(n));
    for (auto& row : b)
      for (auto& x : row) x = coef(rng);
    if (det(b) == 0) continue;
    IntMatrix r = lll_rows(b);
    EXPECT_TRUE(is_lll_reduced(r)) << "trial " << trial;
    EXPECT_EQ(abs(det(r)), abs(det(b)));
  }
}

TEST(Lll, GramFormMatchesRows) {
  IntMatrix b{{12, 2, 3}, {7, 19, 1}, {5, 4, 31}};
  IntMatrix gram(3, std::vector<Integer>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram[i][j] = dot(b[i], b[j]);
  IntMatrix t = lll_gram(gram);
  IntMatrix reduced(3, std::vector<Integer>(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) reduced[i][k] += t[i][j] * b[j][k];
  EXPECT_TRUE(is_lll_reduced(reduced));
  EXPECT_EQ(abs(det(t)), 1);
}

TEST(Lll, RationalGram) {
  // Hilbert-like Gram of [0,1]: entries 1/(i+j+1).
  RatMatrix g(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = Rational(1, i + j + 1);
  IntMatrix t = lll_gram(g);
  EXPECT_EQ(abs(det(t)), 1);
  // The shortest vector of the monomial lattice under int_0^1 is 1 or x or x^2 - x.
  Rational best = quadratic_form(g, t[0], t[0]);
  EXPECT_LE(best, Rational(1, 3));
}

TEST(Lll, RejectsIndefiniteGram) {
  IntMatrix g{{1, 2}, {2, 1}};
  EXPECT_THROW(lll_gram(g), Error);
}
