#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "intcheb/cheb_search.hpp"
#include "intcheb/error.hpp"
#include "intcheb/io.hpp"

using namespace intcheb;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

WeightedProduct x_times_x_minus_1() {
  return WeightedProduct::from_exponents({{parse_poly("x"), 1}, {parse_poly("x-1"), 1}});
}

// Dense double-precision sample of F; an independent lower estimate of sup F.
double sampled_sup(const WeightedProduct& p, double lo, double hi, int n) {
  double best = -INFINITY;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    double f = 0;
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
      double v = 0;
      const auto& c = p.factors[k].poly.coeffs();
      for (std::size_t j = c.size(); j-- > 0;) v = v * x + c[j].get_d();
      f += p.weight(k).get_d() * std::log(std::abs(v));
    }
    best = std::max(best, f);
  }
  return best;
}

}  // namespace

TEST(WeightedProduct, FromExponents) {
  auto p = WeightedProduct::from_exponents({{parse_poly("x"), 3}, {parse_poly("x^2+x-1"), 2}});
  // degree 3 + 4 = 7
  EXPECT_EQ(p.factors[0].alpha, Rational(3, 7));
  EXPECT_EQ(p.factors[1].alpha, Rational(4, 7));
  EXPECT_EQ(p.weight(1), Rational(2, 7));
  EXPECT_NO_THROW(p.validate());
}

TEST(WeightedProduct, ValidateRejects) {
  WeightedProduct p{{{parse_poly("2x-1"), 1}}};
  EXPECT_EQ(kind_of([&] { p.validate(); }), ErrorKind::InvalidInput);
  WeightedProduct q{{{parse_poly("x"), Rational(1, 2)}}};
  EXPECT_EQ(kind_of([&] { q.validate(); }), ErrorKind::InvalidInput);
  WeightedProduct r{{{parse_poly("x^2-1"), 1}}};
  EXPECT_EQ(kind_of([&] { r.validate(); }), ErrorKind::InvalidInput);
}

TEST(Certify, UnitIntervalIsHalf) {
  auto c = certify_attainment(x_times_x_minus_1(), {0, 1}, parse_poly("2x-1"));
  EXPECT_EQ(c.sup_value.as_rational(), Rational(1, 2));
  EXPECT_EQ(c.certificate.resultants.size(), 2u);
  for (const auto& r : c.certificate.resultants) EXPECT_EQ(abs(r), 1);
  // Endpoints 0 and 1 are zeros of P: strictly below.
  EXPECT_EQ(c.certificate.endpoint_margins.size(), 2u);
}

TEST(Certify, ZeroToOneOverN) {
  for (int n = 2; n <= 10; ++n) {
    auto p = WeightedProduct::from_exponents({{parse_poly("x"), 1}});
    auto c = certify_attainment(p, {0, Rational(1, n)}, IntPoly::linear(n, -1));
    EXPECT_EQ(c.sup_value.as_rational(), Rational(1, n)) << n;
  }
}

TEST(Certify, InteriorNonCriticalRootRejected) {
  // 3x-1 has its root inside [0, 1/2] where log|x| is not critical.
  auto p = WeightedProduct::from_exponents({{parse_poly("x"), 1}});
  EXPECT_EQ(kind_of([&] { certify_attainment(p, {0, Rational(1, 2)}, parse_poly("3x-1")); }), ErrorKind::NotCritical);
}

TEST(Certify, IntegerShiftsOfUnitInterval) {
  auto c = certify_attainment(x_times_x_minus_1(), {0, 1}, parse_poly("2x-1"));
  for (int k = -5; k <= 5; ++k) {
    auto d = c.translated(k);
    EXPECT_EQ(d.interval, RatInterval(k, k + 1));
    EXPECT_EQ(certify_attainment(d.product, d.interval, d.q).sup_value.as_rational(), Rational(1, 2)) << k;
  }
}

TEST(Certify, ResultantFailure) {
  EXPECT_EQ(kind_of([] { certify_attainment(x_times_x_minus_1(), {0, 1}, parse_poly("3x-1")); }),
            ErrorKind::ResultantFailed);
}

TEST(Certify, NotCritical) {
  WeightedProduct p{{{parse_poly("x"), Rational(1, 3)}, {parse_poly("x-1"), Rational(2, 3)}}};
  EXPECT_EQ(kind_of([&] { certify_attainment(p, {0, 1}, parse_poly("2x-1")); }), ErrorKind::NotCritical);
}

TEST(Certify, SupExceedsAtEndpoint) {
  // |x(x-1)| at -3/10 is 39/100 > 1/4.
  EXPECT_EQ(kind_of([] { certify_attainment(x_times_x_minus_1(), {Rational(-3, 10), 1}, parse_poly("2x-1")); }),
            ErrorKind::SupExceedsM);
}

TEST(Certify, QMustBeInsideAndNonmonic) {
  EXPECT_EQ(kind_of([] { certify_attainment(x_times_x_minus_1(), {0, Rational(1, 3)}, parse_poly("2x-1")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { certify_attainment(x_times_x_minus_1(), {0, 1}, parse_poly("x")); }),
            ErrorKind::InvalidInput);
}

TEST(Certify, ReflectAndTranslateRecertify) {
  auto c = certify_attainment(x_times_x_minus_1(), {0, 1}, parse_poly("2x-1"));
  for (const auto& d : {c.reflected(), c.translated(3), c.translated(-2)}) {
    auto again = certify_attainment(d.product, d.interval, d.q);
    EXPECT_EQ(again.sup_value, c.sup_value);
  }
  EXPECT_EQ(c.translated(3).interval, RatInterval(3, 4));
}

TEST(Certify, TableFiveQuarterAndThird) {
  auto quarter = load_products(std::string(INTCHEB_FIXTURES) + "/table5_quarter.json").front();
  auto third = load_products(std::string(INTCHEB_FIXTURES) + "/table5_third.json").front();
  EXPECT_EQ(certify_fixture(quarter).sup_value.as_rational(), Rational(1, 4));
  EXPECT_EQ(certify_fixture(third).sup_value.as_rational(), Rational(1, 3));
  // The same products also serve [0, b].
  auto c = certify_attainment(quarter.product, {0, quarter.interval.hi}, quarter.obstruction);
  EXPECT_EQ(c.sup_value.as_rational(), Rational(1, 4));
}

TEST(Certify, CubicObstructionNeedsExactRelations) {
  auto f = load_products(std::string(INTCHEB_FIXTURES) + "/degree_670320.json").front();
  Integer deg = 0;
  for (const auto& [p, e] : *f.exponents) deg += e * p.degree();
  EXPECT_EQ(deg, 670320);
  auto c = certify_fixture(f);
  EXPECT_EQ(c.sup_value.to_string(), "7^(-1/3)");
  int exact = 0;
  for (const auto& r : c.certificate.relations) exact += r.exact ? 1 : 0;
  EXPECT_GT(exact, 0);
  // Each exact relation checks independently in Q[x]/(Q).
  std::vector<IntPoly> fs;
  for (const auto& w : c.product.factors) fs.push_back(w.poly);
  for (const auto& r : c.certificate.relations) {
    if (r.exact) EXPECT_TRUE(verify_relation_exact(fs, c.q, r.exponents));
  }
}

TEST(Certify, AlsoAttainingExtraObstruction) {
  auto all = load_products(std::string(INTCHEB_FIXTURES) + "/table_2_products.json");
  const auto& f = all.front();
  ASSERT_EQ(f.also_attaining.size(), 1u);
  // Without the second obstruction the maximum at -1/2 blocks the strict check.
  EXPECT_EQ(kind_of([&] { certify_attainment(f.product, f.interval, f.obstruction); }),
            ErrorKind::StrictMaxUndecided);
  auto c = certify_fixture(f);
  EXPECT_EQ(c.sup_value.as_rational(), Rational(1, 2));
  EXPECT_EQ(c.certificate.also_attaining.front(), parse_poly("2x+1"));
}

TEST(LogSup, BoundsDenseSampling) {
  std::mt19937 rng(3);
  const std::vector<IntPoly> pool{parse_poly("x"), parse_poly("x-1"), parse_poly("x^2+x-1"),
                                  parse_poly("x^2-3x+1"), parse_poly("x^3-x-1")};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<IntPoly, Integer>> powers;
    for (const auto& f : pool) {
      const int e = static_cast<int>(rng() % 4);
      if (e > 0) powers.emplace_back(f, e);
    }
    if (powers.empty()) continue;
    auto p = WeightedProduct::from_exponents(powers);
    const double lo = -1.0 + (rng() % 100) / 100.0, hi = lo + 0.2 + (rng() % 150) / 100.0;
    const RatInterval I(rationalize(lo, 100), rationalize(hi, 100));
    const Enclosure bound = log_sup_bound(p, I);
    const double sampled = sampled_sup(p, I.lo.get_d(), I.hi.get_d(), 20000);
    EXPECT_LE(sampled, bound.upper_double() + 1e-12) << trial;
    EXPECT_GE(sampled, bound.lower_double() - 1e-3) << trial;
  }
}

TEST(Search, LllCandidatesOnUnitInterval) {
  auto cs = lll_candidates({0, 1}, 1);
  ASSERT_EQ(cs.factors.size(), 2u);
  EXPECT_EQ(cs.factors[0], parse_poly("x-1"));
  EXPECT_EQ(cs.factors[1], parse_poly("x"));
}

TEST(Search, GramMatrixMoments) {
  auto g = gram_matrix({0, 2}, 1);
  // int_0^2 x^(i+j) dx plus 1 at (1,1)
  EXPECT_EQ(g[0][0], 2);
  EXPECT_EQ(g[0][1], 2);
  EXPECT_EQ(g[1][1], Rational(8, 3) + 1);
}

TEST(Search, OptimizeWeightsRecoversHalfHalf) {
  auto w = optimize_weights({parse_poly("x"), parse_poly("x-1")}, {0, 1}, parse_poly("2x-1"));
  ASSERT_EQ(w.alphas.size(), 2u);
  EXPECT_EQ(w.alphas[0], Rational(1, 2));
  EXPECT_EQ(w.alphas[1], Rational(1, 2));
  EXPECT_NEAR(std::exp(w.t), 0.5, 1e-9);
}

TEST(Search, FilterFactorsKeepsUnitResultants) {
  auto kept = filter_factors({parse_poly("x"), parse_poly("x-1"), parse_poly("x-2")}, parse_poly("3x-1"));
  // Res(x-1, 3x-1) = 2 and Res(x-2, 3x-1) = 5 are dropped.
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], parse_poly("x"));
}

TEST(Search, Rationalize) {
  EXPECT_EQ(rationalize(1.0 / 3, 1000), Rational(1, 3));
  EXPECT_EQ(rationalize(3.14159265358979, 1000), Rational(355, 113));
  EXPECT_EQ(rationalize(-0.75, 10), Rational(-3, 4));
}

TEST(Refine, TableTwoEndpointsMoveToCrossings) {
  auto all = load_products(std::string(INTCHEB_FIXTURES) + "/table_2_products.json");
  const auto& f = all[4];
  auto R = refine_endpoints(f.product, *f.approx_interval, ObstructionValue::of(f.obstruction));
  EXPECT_EQ(R, f.interval);
  // Just outside the refined endpoint F exceeds log(1/2).
  const Enclosure out = log_potential(f.product, Enclosure::exact(R.hi + Rational(1, 10000000000L)));
  EXPECT_TRUE(out.certainly_greater(ObstructionValue::of(f.obstruction).log_enclosure().upper()));
}
