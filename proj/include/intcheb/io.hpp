#pragma once

// JSON forms of weighted products, obstruction tables and fixture files.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "intcheb/cheb_search.hpp"
#include "intcheb/padic.hpp"

namespace intcheb {

/// {"name", "interval": {"lo", "hi"}, "obstruction": {"poly"} or {"coeffs"},
///  "factors": [{"poly" or "coeffs", "exponent" or "alpha"}], ...}
/// Rationals are strings ("2/5", "-0.3241238880"); coeffs run from a_0 up.
struct ProductFixture {
  std::string name;
  RatInterval interval;
  IntPoly obstruction;
  WeightedProduct product;
  /// Present when the factors were given with integer exponents.
  std::optional<FactoredPoly> exponents;
  /// Further polynomials of the obstruction's value attained by the product.
  std::vector<IntPoly> also_attaining;
  /// Interval as printed in the source table, when it differs.
  std::optional<RatInterval> approx_interval;
};

IntPoly poly_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const IntPoly& p);
RatInterval interval_from_json(const nlohmann::json& j);
nlohmann::json interval_to_json(const RatInterval& I);

ProductFixture product_from_json(const nlohmann::json& j);
nlohmann::json product_to_json(const ProductFixture& f);
/// certify_attainment on the fixture's own interval and obstruction.
CertifiedProduct certify_fixture(const ProductFixture& f, CertifyOptions options = {});

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// A file holding one product object or {"products": [...]}.
std::vector<ProductFixture> load_products(const std::string& path);

struct TableRow {
  int row;
  IntPoly poly;
  std::optional<RatInterval> interval;
  /// Extra numeric columns by name, kept as exact rationals.
  std::vector<std::pair<std::string, Rational>> values;
};
/// {"rows": [{"row", "poly", "interval"?, ...}]}
std::vector<TableRow> load_table(const std::string& path);

}  // namespace intcheb
