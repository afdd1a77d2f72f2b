#include <gtest/gtest.h>

#include <filesystem>

#include "intcheb/error.hpp"
#include "intcheb/io.hpp"

using namespace intcheb;
using nlohmann::json;

namespace {

const std::string kFixtures = INTCHEB_FIXTURES;

std::vector<long> coeffs(const IntPoly& p) {
  std::vector<long> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_si());
  return out;
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(coeffs(parse_poly("7x^3-7x^2+1")), (std::vector<long>{1, 0, -7, 7}));
  EXPECT_EQ(coeffs(parse_poly("x")), (std::vector<long>{0, 1}));
  EXPECT_EQ(coeffs(parse_poly("2x^2 - 1")), (std::vector<long>{-1, 0, 2}));
  EXPECT_EQ(coeffs(parse_poly("-x^2+x")), (std::vector<long>{0, 1, -1}));
  EXPECT_EQ(coeffs(parse_poly("3*x^2 + 2 x")), (std::vector<long>{0, 2, 3}));
}

TEST(ParsePoly, RoundTripsThroughPrinter) {
  for (const char* s : {"7x^3+7x^2-1", "57x^6+81x^5+6x^4-32x^3-9x^2+3x+1", "x", "-x+1", "2x^2-1", "12"}) {
    const IntPoly p = parse_poly(s);
    EXPECT_EQ(parse_poly(to_string(p)), p) << s;
  }
}

TEST(ParsePoly, ErrorsCarryPosition) {
  try {
    parse_poly("7x^3+");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("position 5"), std::string::npos) << e.what();
  }
  for (const char* bad : {"", "x^", "7y", "x^-2", "++x"}) {
    try {
      parse_poly(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("0.303"), Rational(303, 1000));
  EXPECT_EQ(parse_rational("-0.684"), Rational(-171, 250));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Json, PolyForms) {
  const IntPoly p = parse_poly("5x^3+4x^2-x-1");
  EXPECT_EQ(poly_from_json(json("5x^3+4x^2-x-1")), p);
  EXPECT_EQ(poly_from_json(json{{"poly", "5x^3+4x^2-x-1"}}), p);
  EXPECT_EQ(poly_from_json(json{{"coeffs", {"-1", "-1", "4", "5"}}}), p);
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}

TEST(Json, IntervalRoundTrip) {
  const RatInterval I(Rational(-3319, 10000), Rational(1, 3));
  EXPECT_EQ(interval_from_json(interval_to_json(I)), I);
  EXPECT_EQ(interval_from_json(json{{"lo", "1/4"}, {"hi", "0.303"}}), RatInterval(Rational(1, 4), Rational(303, 1000)));
}

TEST(Fixtures, ProductsParseAndRoundTrip) {
  const auto all = load_products(kFixtures + "/table_2_products.json");
  ASSERT_EQ(all.size(), 10u);
  for (const auto& f : all) {
    const ProductFixture back = product_from_json(product_to_json(f));
    EXPECT_EQ(back.name, f.name);
    EXPECT_EQ(back.interval, f.interval);
    EXPECT_EQ(back.obstruction, f.obstruction);
    EXPECT_EQ(back.also_attaining, f.also_attaining);
    ASSERT_EQ(back.product.factors.size(), f.product.factors.size());
    for (std::size_t i = 0; i < f.product.factors.size(); ++i) {
      EXPECT_EQ(back.product.factors[i].poly, f.product.factors[i].poly);
      EXPECT_EQ(back.product.factors[i].alpha, f.product.factors[i].alpha);
    }
    // Refined endpoints sit inside the approximate printed interval.
    ASSERT_TRUE(f.approx_interval.has_value());
    EXPECT_TRUE(f.approx_interval->contains(f.interval) || f.interval.contains(*f.approx_interval) ||
                (f.interval.width() - f.approx_interval->width()) < Rational(1, 1000));
  }
}

TEST(Fixtures, FileRoundTrip) {
  const auto f = load_products(kFixtures + "/table5_third.json").front();
  const auto path = std::filesystem::temp_directory_path() / "intcheb_io_test.json";
  write_json_file(path.string(), product_to_json(f));
  const auto back = load_products(path.string()).front();
  std::filesystem::remove(path);
  EXPECT_EQ(certify_fixture(back).sup_value.as_rational(), Rational(1, 3));
}

TEST(Fixtures, AllShippedFilesLoad) {
  EXPECT_EQ(load_table(kFixtures + "/table_1_48.json").size(), 22u);
  EXPECT_EQ(load_table(kFixtures + "/table_3_spans.json").size(), 9u);
  // Table 4 carries lead, degree and ell only.
  EXPECT_EQ(read_json_file(kFixtures + "/table_4_lplus.json").at("rows").size(), 60u);
  for (const char* name : {"table5_quarter.json", "table5_third.json", "degree_670320.json", "counterexample_r.json"}) {
    EXPECT_EQ(load_products(kFixtures + "/" + name).size(), 1u) << name;
  }
  const auto r = load_products(kFixtures + "/counterexample_r.json").front();
  ASSERT_TRUE(r.exponents.has_value());
  EXPECT_EQ(r.exponents->size(), 5u);
}

TEST(Fixtures, MissingFile) {
  EXPECT_THROW(load_products(kFixtures + "/does_not_exist.json"), Error);
}
