#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "intcheb/bounds.hpp"
#include "intcheb/error.hpp"
#include "intcheb/io.hpp"

using namespace intcheb;

namespace {

const std::string kFixtures = INTCHEB_FIXTURES;

std::vector<ObstructionRecord> table_records() {
  std::vector<ObstructionRecord> out;
  for (const auto& r : load_table(kFixtures + "/table_1_48.json")) out.push_back(make_record(r.poly));
  return out;
}

std::vector<CertifiedProduct> table_products() {
  std::vector<CertifiedProduct> out;
  for (const auto& f : load_products(kFixtures + "/table_2_products.json")) out.push_back(certify_fixture(f));
  return out;
}

// Double-precision reference for the defining equation of alpha*.
double alpha_star_residual(double a) { return std::log(4) + a * std::log(a) + (1 - a) * std::log(1 - a) - a * std::log(5); }

double ell_equation(double a, double y) {
  return (1 - a) * std::log(std::abs(1 - y * y)) + a * std::log(std::abs(1 - y * y / 5));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(LminusUpper, SpansAsBounds) {
  EXPECT_NEAR(lminus_upper(make_record(parse_poly("7x^3+7x^2-1")), Rational(1, 2)).mid_double(), 1.064961507, 1e-9);
  EXPECT_NEAR(lminus_upper(make_record(parse_poly("5x^3+3x^2-2x-1")), Rational(29, 50)).mid_double(), 1.390656045,
              1e-9);
  EXPECT_EQ(kind_of([] { lminus_upper(make_record(parse_poly("3x^2-1")), Rational(3, 5)); }),
            ErrorKind::ValueNotAboveT);
}

TEST(CoverMaxGap, TwoEntries) {
  CoverSystem c{{CoverEntry::of_interval({0, Rational(3, 5)}, "a"), CoverEntry::of_interval({1, Rational(8, 5)}, "b")}};
  const GapResult g = cover_max_gap(c);
  EXPECT_TRUE(g.value.contains(Rational(8, 5)));
  EXPECT_EQ(g.extremal, (std::vector<std::size_t>{0}));
}

TEST(CoverMaxGap, RequiresClosure) {
  CoverSystem c{{CoverEntry::of_interval({0, Rational(3, 5)}, "a"), CoverEntry::of_interval({Rational(1, 2), 1}, "b")}};
  EXPECT_EQ(kind_of([&] { cover_max_gap(c); }), ErrorKind::MissingTranslateClosure);
}

TEST(CoverMinGap, ThreeEntries) {
  CoverSystem c{{CoverEntry::of_interval({0, Rational(7, 10)}, "1"),
                 CoverEntry::of_interval({Rational(1, 2), Rational(6, 5)}, "2"),
                 CoverEntry::of_interval({1, Rational(17, 10)}, "3")}};
  const GapResult g = cover_min_gap(c);
  EXPECT_TRUE(g.value.contains(Rational(1, 5)));
}

TEST(CoverMaxGap, TableRecordsGiveRowsFifteenSixteen) {
  const auto recs = table_records();
  const GapResult g = cover_max_gap(translate_closed_cover(recs));
  EXPECT_GT(g.value.lower_double(), 1.471);
  EXPECT_LT(g.value.upper_double(), 1.4715);
  // Row 17 mirrors row 15 about 1/2 and row 16 is symmetric, so the pair
  // (16, 17) ties exactly with (15, 16).
  ASSERT_EQ(g.extremal.size(), 2u);
  EXPECT_EQ(g.sorted[g.extremal[0]].label, "15");
  EXPECT_EQ(g.sorted[g.extremal[0] + 1].label, "16");
  EXPECT_EQ(g.sorted[g.extremal[1]].label, "16");
  EXPECT_EQ(g.sorted[g.extremal[1] + 1].label, "17");
  EXPECT_EQ(reflect(parse_poly("15x^4-29x^3+13x^2+x-1"), 1), parse_poly("15x^4-31x^3+16x^2-1"));
  // The mod-1 form agrees.
  EXPECT_NEAR(cover_gap_mod1(recs).mid_double(), g.value.mid_double(), 1e-9);
}

TEST(CoverGaps, TranslationInvariant) {
  const auto recs = table_records();
  const CoverSystem c = translate_closed_cover(recs);
  CoverSystem shifted;
  for (const auto& e : c.entries) shifted.entries.push_back(e.translated(3));
  EXPECT_NEAR(cover_max_gap(shifted).value.mid_double(), cover_max_gap(c).value.mid_double(), 1e-12);
}

TEST(CoverMinGap, TableProducts) {
  const auto products = table_products();
  const GapResult g = cover_min_gap(reflected_product_cover(products));
  EXPECT_GT(g.value.lower_double(), 1.008848);
  EXPECT_EQ(reflected_product_cover(products).entries.size(), 21u);
}

TEST(LplusLower, ExactIntervals) {
  auto p = WeightedProduct::from_exponents({{parse_poly("x"), 1}, {parse_poly("x-1"), 1}});
  EXPECT_TRUE(lplus_lower(certify_attainment(p, {0, 1}, parse_poly("2x-1"))).contains(Rational(1)));
  for (int n = 2; n <= 5; ++n) {
    // |x| on [-1/n, 1/n] reaches 1/n at both ends.
    auto x = WeightedProduct::from_exponents({{parse_poly("x"), 1}});
    CertifyOptions opt;
    opt.also_attaining = {IntPoly::linear(n, 1)};
    auto c = certify_attainment(x, {Rational(-1, n), Rational(1, n)}, IntPoly::linear(n, -1), opt);
    EXPECT_TRUE(lplus_lower(c).contains(Rational(2, n))) << n;
  }
}

TEST(AlphaStar, EnclosureAndResidual) {
  const Enclosure a = alpha_star();
  EXPECT_LE(a.upper_double() - a.lower_double(), 1e-6);
  EXPECT_NEAR(a.mid_double(), 0.4358, 1e-4);
  EXPECT_LT(std::abs(alpha_star_residual(a.mid_double())), 1e-5);
  EXPECT_LT(alpha_star_residual(a.lower_double() - 1e-4) * alpha_star_residual(a.upper_double() + 1e-4), 0);
}

TEST(EllAlpha, PublishedValues) {
  EXPECT_NEAR(ell_alpha(Rational(1, 2)).mid_double(), 2.449, 5e-3);
  EXPECT_NEAR(ell_alpha(Rational(7, 20)).mid_double(), 1.559, 5e-3);
  const Enclosure e0 = ell_alpha(0);
  EXPECT_NEAR(e0.mid_double(), std::sqrt(2.0), 1e-9);
}

TEST(EllAlpha, SolvesItsEquation) {
  for (int k = 0; k <= 8; ++k) {
    Rational a(k * 6, 100);
    a.canonicalize();
    const Enclosure e = ell_alpha(a);
    const double y = e.mid_double();
    EXPECT_NEAR(ell_equation(a.get_d(), y), 0, 1e-6) << k;
  }
}

TEST(EllAlpha, BranchJumpAtAlphaStar) {
  const double s = alpha_star().mid_double();
  const Enclosure left = ell_alpha(rationalize(s - 1e-3, 100000));
  const Enclosure right = ell_alpha(rationalize(s + 1e-3, 100000));
  EXPECT_LE(left.upper_double(), std::sqrt(5.0));
  EXPECT_GE(right.lower_double(), std::sqrt(5.0));
}

TEST(EllAlpha, OutOfRange) {
  EXPECT_EQ(kind_of([] { ell_alpha(Rational(-1, 10)); }), ErrorKind::AlphaOutOfRange);
  EXPECT_EQ(kind_of([] { ell_alpha(Rational(9, 10)); }), ErrorKind::AlphaOutOfRange);
}

class EnvelopeTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto products = table_products();
    inputs_ = new EnvelopeInputs{table_records(), products, cover_min_gap(reflected_product_cover(products)).value.lower()};
    points_ = new std::vector<BoundPoint>(
        envelope(default_grid({Rational(3, 10), Rational(11, 10), Rational(5, 4), Rational(29, 50)}), *inputs_));
  }
  static void TearDownTestSuite() {
    delete points_;
    delete inputs_;
  }
  static const BoundPoint& at(const Rational& t) {
    for (const auto& p : *points_) {
      if (p.t == t) return p;
    }
    throw std::runtime_error("t not on grid");
  }
  static EnvelopeInputs* inputs_;
  static std::vector<BoundPoint>* points_;
};
EnvelopeInputs* EnvelopeTest::inputs_ = nullptr;
std::vector<BoundPoint>* EnvelopeTest::points_ = nullptr;

TEST_F(EnvelopeTest, ClampsAboveOne) {
  for (const Rational t : {Rational(1), Rational(11, 10), Rational(5, 4)}) {
    const auto& p = at(t);
    for (const auto& e : {p.lminus_lo, p.lminus_hi, p.lplus_lo, p.lplus_hi}) EXPECT_TRUE(e->contains(4 * t));
  }
}

TEST_F(EnvelopeTest, LminusZeroBelowHalf) {
  const auto& p = at(Rational(3, 10));
  EXPECT_TRUE(p.lminus_lo->contains(Rational(0)));
  EXPECT_TRUE(p.lminus_hi->contains(Rational(0)));
}

TEST_F(EnvelopeTest, HalfMatchesKnownBrackets) {
  const auto& p = at(Rational(1, 2));
  EXPECT_GE(p.lminus_lo->lower_double(), 1.008848);
  EXPECT_NEAR(p.lminus_hi->upper_double(), 1.064961507, 1e-8);
  EXPECT_NEAR(p.lplus_lo->lower_double(), std::sqrt(2.0), 1e-8);
  EXPECT_LE(p.lplus_hi->upper_double(), 1.4715);
}

TEST_F(EnvelopeTest, MonotoneAndConsistent) {
  for (std::size_t i = 0; i < points_->size(); ++i) {
    const auto& p = (*points_)[i];
    EXPECT_LE(p.lminus_lo->lower(), p.lminus_hi->upper());
    EXPECT_LE(p.lplus_lo->lower(), p.lplus_hi->upper());
    EXPECT_LE(p.lminus_hi->upper(), p.lplus_hi->upper());
    EXPECT_LE(p.lminus_lo->lower(), p.lplus_lo->lower());
    if (i > 0) {
      const auto& q = (*points_)[i - 1];
      EXPECT_LE(q.lminus_hi->upper(), p.lminus_hi->upper());
      EXPECT_LE(q.lplus_hi->upper(), p.lplus_hi->upper());
    }
  }
}

TEST_F(EnvelopeTest, CsvShape) {
  std::ostringstream out;
  write_csv(out, *points_);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,lminus_lo,lminus_hi,lplus_lo,lplus_hi");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    ++rows;
  }
  EXPECT_EQ(rows, points_->size());
}

TEST(DefaultGrid, UniformAndSorted) {
  const auto g = default_grid({Rational(3, 10)});
  EXPECT_EQ(g.size(), 52u);
  EXPECT_EQ(g.front(), Rational(3, 10));
  EXPECT_EQ(g.back(), Rational(1));
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(LengthOne, HalfIntegerWindow) {
  const Rational m("1008848/1000000");
  EXPECT_TRUE(length_one_value_is_half({Rational(1, 3), Rational(4, 3)}, m));
  EXPECT_TRUE(length_one_value_is_half({0, Rational(1261, 1250)}, m));
  EXPECT_FALSE(length_one_value_is_half({0, Rational(1, 2)}, m));
  EXPECT_FALSE(length_one_value_is_half({0, Rational(51, 50)}, m));
}
