#include <gtest/gtest.h>

#include <random>

#include "intcheb/factor.hpp"

using namespace intcheb;

TEST(Factor, Examples) {
  Factorization f = factor(parse_poly("x^2-x"));
  EXPECT_EQ(f.content, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].factor, parse_poly("x-1"));
  EXPECT_EQ(f.factors[1].factor, parse_poly("x"));
  Factorization g = factor(parse_poly("6x^2-5x+1"));
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].factor, parse_poly("2x-1"));
  EXPECT_EQ(g.factors[1].factor, parse_poly("3x-1"));
  EXPECT_TRUE(is_irreducible(parse_poly("3x^2-1")));
  EXPECT_FALSE(is_irreducible(parse_poly("4x^2-2")));
}

TEST(Factor, ContentAndMultiplicity) {
  IntPoly p = parse_poly("-6") * pow(parse_poly("x^2+x-1"), 3) * parse_poly("2x-1");
  Factorization f = factor(p);
  EXPECT_EQ(f.content, -6);
  EXPECT_EQ(f.expand(), p);
}

TEST(Factor, SwinnertonDyerStyleHardCase) {
  // x^4 - 10x^2 + 1 is irreducible but splits into quadratics or linears
  // modulo every prime.
  EXPECT_TRUE(is_irreducible(parse_poly("x^4-10x^2+1")));
  EXPECT_TRUE(is_irreducible(parse_poly("x^8-40x^6+352x^4-960x^2+576")));
}

TEST(Factor, RecombinesRandomProducts) {
  // Products of known irreducibles (from the obstruction tables).
  const char* pieces[] = {"7x^3+7x^2-1", "3x^2-1", "x^2+x-1", "2x-1", "x", "x-1", "5x^3+3x^2-2x-1",
                          "57x^6+81x^5+6x^4-32x^3-9x^2+3x+1", "x^4+8x^3-8x^2+1", "15x^4-29x^3+13x^2+x-1"};
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly p = IntPoly::constant(1);
    int n = rng() % 4 + 1;
    for (int i = 0; i < n; ++i) p = p * parse_poly(pieces[rng() % 10]);
    Factorization f = factor(p);
    EXPECT_EQ(f.expand(), p);
    for (const auto& sf : f.factors) {
      EXPECT_EQ(content(sf.factor), 1);
      EXPECT_GT(sf.factor.lead(), 0);
      // Each reported factor must be one of the pieces.
      bool known = false;
      for (const char* s : pieces) known |= parse_poly(s) == sf.factor;
      EXPECT_TRUE(known) << to_string(sf.factor);
    }
  }
}

TEST(Factor, DeterministicOrder) {
  Factorization f = factor(parse_poly("x^3-x"));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].factor, parse_poly("x-1"));
  EXPECT_EQ(f.factors[1].factor, parse_poly("x"));
  EXPECT_EQ(f.factors[2].factor, parse_poly("x+1"));
}
