#include <gtest/gtest.h>

#include <random>

#include "intcheb/error.hpp"
#include "intcheb/real_roots.hpp"

using namespace intcheb;

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots_in(parse_poly("3x^2-1"), {-1, 1}), 2);
  EXPECT_EQ(count_roots_in(parse_poly("7x^3-7x^2+1"), {Rational(-67, 200), Rational(3, 4)}), 3);
  EXPECT_EQ(count_roots_in(parse_poly("x^2+1"), {-10, 10}), 0);
  EXPECT_THROW(count_roots_in(IntPoly{}, {0, 1}), Error);
}

TEST(CountRoots, ClosedEndpoints) {
  IntPoly p = parse_poly("x^2-x");
  EXPECT_EQ(count_roots_in(p, {0, 1}), 2);
  EXPECT_EQ(count_roots_in(p, {0, 0}), 1);
  EXPECT_EQ(count_roots_in(p, {Rational(1, 2), 1}), 1);
  EXPECT_EQ(count_roots_in(parse_poly("2x-1"), {Rational(1, 2), Rational(1, 2)}), 1);
  // Repeated root counts once as distinct, twice with multiplicity.
  IntPoly sq = parse_poly("4x^2-4x+1");
  EXPECT_EQ(count_roots_in(sq, {0, 1}), 1);
  EXPECT_EQ(count_roots_with_multiplicity(sq, {0, 1}), 2);
}

TEST(Isolate, Examples) {
  auto b = isolate_roots(parse_poly("x^2-x"));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(b[0].interval.contains(Rational(0)));
  EXPECT_TRUE(b[1].interval.contains(Rational(1)));
  auto c = isolate_roots(parse_poly("2x^2-1"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].interval.lo, -c[1].interval.hi);
  auto d = isolate_roots(parse_poly("7x^3+7x^2-1"));
  ASSERT_EQ(d.size(), 3u);
  RootBox lo = refine(d.front(), Rational(1, 100000));
  RootBox hi = refine(d.back(), Rational(1, 100000));
  EXPECT_NEAR(lo.interval.mid().get_d(), -0.737, 5e-4);
  EXPECT_NEAR(hi.interval.mid().get_d(), 0.328, 5e-4);
}

TEST(Refine, Examples) {
  auto b = isolate_roots(parse_poly("2x-1"));
  RootBox r = refine(b[0], Rational(1, Integer("100000000000000000000")));
  EXPECT_TRUE(r.interval.contains(Rational(1, 2)));
  auto q = isolate_roots(parse_poly("7x^3-7x^2+1"));
  RootBox m = refine(q.back(), Rational(1, 1000000000));
  EXPECT_LE(m.interval.width(), Rational(1, 1000000000));
  // numpy.roots([7,-7,0,1]) gives 0.73697623 for the largest root.
  EXPECT_NEAR(m.interval.mid().get_d(), 0.73697623, 1e-8);
  auto s = isolate_roots(parse_poly("3x^2-1"));
  RootBox n = refine(s.front(), Rational(1, 1000000000));
  EXPECT_NEAR(n.interval.mid().get_d(), -0.577350269, 1e-9);
}

TEST(Span, Examples) {
  EXPECT_NEAR(root_span(parse_poly("2x^2-1")).mid_double(), 1.414213562, 1e-9);
  EXPECT_NEAR(root_span(parse_poly("3x^2-1")).mid_double(), 1.154700538, 1e-9);
  Enclosure one = root_span(parse_poly("x^2-x"));
  EXPECT_TRUE(one.contains(Rational(1)));
  EXPECT_THROW(root_span(parse_poly("x^3-2")), Error);
}

TEST(Span, NestsUnderRefinement) {
  IntPoly p = parse_poly("5x^3+3x^2-2x-1");
  Enclosure prev = root_span(p, 16);
  for (mpfr_prec_t prec : {32, 64, 128, 256}) {
    Enclosure next = root_span(p, prec);
    EXPECT_TRUE(prev.contains(next));
    prev = next;
  }
}

TEST(EvalBall, Examples) {
  Enclosure four = eval_ball(parse_poly("x^2"), Enclosure::exact(Rational(2)));
  EXPECT_EQ(four.lower(), 4);
  EXPECT_EQ(four.upper(), 4);
  Enclosure zero = eval_ball(parse_poly("2x-1"), Enclosure::exact(Rational(1, 2)));
  EXPECT_EQ(zero.lower(), 0);
  EXPECT_EQ(zero.upper(), 0);
  Enclosure golden = (Enclosure::exact(1L, 200) + sqrt(Enclosure::exact(2L, 200))) / Enclosure::exact(2L, 200);
  Enclosure v = eval_ball(parse_poly("x^2-x"), golden);
  EXPECT_TRUE(v.contains(Rational(1, 4)));
  EXPECT_LT(Rational(v.upper() - v.lower()).get_d(), 1e-50);
}

TEST(EvalBall, SoundAtRationalPoints) {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    std::vector<Integer> v(rng() % 7 + 1);
    for (auto& c : v) c = static_cast<long>(rng() % 201) - 100;
    IntPoly p(v);
    Rational x(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 997) + 1);
    x.canonicalize();
    EXPECT_TRUE(eval_ball(p, Enclosure::exact(x, 53)).contains(evaluate(p, x)));
  }
}

TEST(CountRoots, AgreesWithIsolation) {
  std::mt19937 rng(29);
  for (int i = 0; i < 150; ++i) {
    std::vector<Integer> v(rng() % 6 + 2);
    for (auto& c : v) c = static_cast<long>(rng() % 11) - 5;
    if (v.back() == 0) v.back() = 1;
    IntPoly p(v);
    if (p.degree() < 1) continue;
    Rational a(static_cast<long>(rng() % 9) - 4, 2), b(static_cast<long>(rng() % 9) + 1, 2);
    if (a > b) std::swap(a, b);
    RatInterval I(a, b);
    EXPECT_EQ(count_roots_in(p, I), static_cast<int>(isolate_roots_in(p, I).size())) << to_string(p);
    for (const auto& b : isolate_roots_in(p, I)) EXPECT_TRUE(I.contains(b.interval));
  }
}

TEST(CompareRoots, OrdersDistinctPolynomials) {
  auto a = isolate_roots(parse_poly("3x^2-1"));
  auto b = isolate_roots(parse_poly("7x^3-4x^2-2x+1"));
  RootBox x = a.back(), y = b.back();  // 0.577 vs 0.684
  EXPECT_EQ(compare_roots(x, y), -1);
  RootBox u = isolate_roots(parse_poly("2x-1"))[0], w = isolate_roots(parse_poly("4x^2-1")).back();
  EXPECT_EQ(compare_roots(u, w), 0);
}
