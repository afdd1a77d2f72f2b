#include <gtest/gtest.h>

#include <random>

#include "intcheb/error.hpp"
#include "intcheb/poly.hpp"

using namespace intcheb;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  std::vector<Integer> v(deg(rng) + 1);
  for (auto& c : v) c = coef(rng);
  if (v.back() == 0) v.back() = 1;
  return IntPoly(std::move(v));
}

}  // namespace

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(IntPoly{-1, 2}, Rational(1, 2)), 0);
  EXPECT_EQ(evaluate(IntPoly{0, -1, 1}, Rational(1, 2)), Rational(-1, 4));
  EXPECT_EQ(evaluate(parse_poly("7x^3-7x^2+1"), Rational(0)), 1);
}

TEST(Evaluate, SignAtMatchesExactValue) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = random_poly(rng, 6, 9);
    Rational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 13) + 1);
    x.canonicalize();
    EXPECT_EQ(sign_at(p, x), sgn(evaluate(p, x)));
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(parse_poly("x^3"), 1), parse_poly("3x^2"));
  EXPECT_EQ(derivative(parse_poly("7x^3+7x^2-1"), 2), parse_poly("42x+14"));
  EXPECT_TRUE(derivative(parse_poly("2x-1"), 2).is_zero());
}

// Independent oracle: Sylvester determinant by cofactor expansion over
// rationals, for tiny sizes only.
Rational det_cofactor(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    Rational term = a[0][j] * det_cofactor(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Integer sylvester_oracle(const IntPoly& p, const IntPoly& q) {
  const int m = p.degree(), n = q.degree();
  std::vector<std::vector<Rational>> a(m + n, std::vector<Rational>(m + n));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) a[r][r + j] = p.coeffs()[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = q.coeffs()[n - j];
  }
  return det_cofactor(a).get_num();
}

TEST(Resultant, Examples) {
  EXPECT_EQ(abs(resultant(parse_poly("2x-1"), parse_poly("x"))), 1);
  EXPECT_EQ(abs(resultant(parse_poly("x^2-x"), parse_poly("2x-1"))), 1);
  IntPoly p = parse_poly("x^3-2x+5");
  EXPECT_EQ(resultant(p, p), 0);
}

TEST(Resultant, AgreesWithCofactorOracleAndSwapSign) {
  std::mt19937 rng(11);
  for (int i = 0; i < 150; ++i) {
    IntPoly p = random_poly(rng, 4, 6);
    IntPoly q = random_poly(rng, 4, 6);
    if (p.degree() < 1 || q.degree() < 1) continue;
    Integer r = resultant(p, q);
    EXPECT_EQ(r, sylvester_oracle(p, q)) << to_string(p) << " / " << to_string(q);
    EXPECT_EQ(resultant_subresultant(p, q), r);
    int s = (p.degree() * q.degree()) % 2 ? -1 : 1;
    EXPECT_EQ(resultant(q, p), s * r);
  }
}

TEST(Resultant, SubresultantMatchesSylvesterAtHigherDegree) {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    IntPoly p = random_poly(rng, 10, 20);
    IntPoly q = random_poly(rng, 9, 20);
    if (p.degree() < 1 || q.degree() < 1) continue;
    EXPECT_EQ(resultant_subresultant(p, q), resultant_sylvester(p, q));
  }
  // A common factor forces zero.
  IntPoly c = parse_poly("x^2+x-1");
  EXPECT_EQ(resultant_subresultant(c * parse_poly("3x^5-x+2"), c * parse_poly("x^6+7")), 0);
}

TEST(Gcd, SquarefreeDecompositionReassembles) {
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    IntPoly a = random_poly(rng, 3, 5), b = random_poly(rng, 2, 5);
    if (a.degree() < 1 || b.degree() < 1) continue;
    IntPoly p = primitive_part(a * b * b * a * a);
    IntPoly r = IntPoly::constant(1);
    for (const auto& sf : squarefree_decomposition(p)) r = r * pow(sf.factor, sf.multiplicity);
    EXPECT_EQ(r, p);
  }
}

TEST(Substitution, TranslateReflectScale) {
  IntPoly q = parse_poly("7x^3+7x^2-1");
  EXPECT_EQ(translate(q, -1), parse_poly("7x^3-14x^2+7x-1"));
  EXPECT_EQ(reflect(parse_poly("x"), 1), parse_poly("1-x"));
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(evaluate(translate(q, k), Rational(1, 3)), evaluate(q, Rational(1, 3) + k));
  EXPECT_EQ(scale_roots(parse_poly("2x-1"), 3), parse_poly("2x-3"));
}

TEST(Parse, TermSyntax) {
  EXPECT_EQ(parse_poly("7x^3-7x^2+1").coeffs(), (std::vector<Integer>{1, 0, -7, 7}));
  EXPECT_EQ(parse_poly("x").coeffs(), (std::vector<Integer>{0, 1}));
  EXPECT_EQ(parse_poly("2x^2 - 1").coeffs(), (std::vector<Integer>{-1, 0, 2}));
  EXPECT_EQ(parse_poly("2x2-1"), parse_poly("2*x**2-1"));
  EXPECT_EQ(parse_poly(R"({"coeffs": ["1", 0, "-7", 7]})"), parse_poly("7x^3-7x^2+1"));
  EXPECT_THROW(parse_poly("2x^"), Error);
  EXPECT_THROW(parse_poly("x y"), Error);
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    IntPoly p = random_poly(rng, 8, 1000);
    EXPECT_EQ(parse_poly(to_string(p)), p);
  }
}

TEST(Parse, Rationals) {
  EXPECT_EQ(parse_rational("0.303"), Rational(303, 1000));
  EXPECT_EQ(parse_rational("-0.684"), Rational(-171, 250));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Ordering, DegreeThenCoefficients) {
  EXPECT_LT(parse_poly("x+5"), parse_poly("x^2"));
  EXPECT_LT(parse_poly("2x-1"), parse_poly("3x-1"));
  EXPECT_LT(parse_poly("3x-2"), parse_poly("3x-1"));
}
