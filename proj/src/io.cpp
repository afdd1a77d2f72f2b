#include "intcheb/io.hpp"

#include <fstream>

#include "intcheb/error.hpp"

namespace intcheb {

using nlohmann::json;

namespace {

Rational rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

}  // namespace

IntPoly poly_from_json(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (j.contains("poly")) return parse_poly(j.at("poly").get<std::string>());
  if (j.contains("coeffs")) {
    std::vector<Integer> c;
    for (const auto& x : j.at("coeffs")) {
      c.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
    }
    return IntPoly(std::move(c));
  }
  throw Error(ErrorKind::ParseError, "polynomial needs \"poly\" or \"coeffs\"");
}

json poly_to_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"poly", to_string(p)}, {"coeffs", c}};
}

RatInterval interval_from_json(const json& j) {
  return {rational_field(j.at("lo")), rational_field(j.at("hi"))};
}

json interval_to_json(const RatInterval& I) { return {{"lo", to_string(I.lo)}, {"hi", to_string(I.hi)}}; }

ProductFixture product_from_json(const json& j) {
  try {
    ProductFixture f;
    f.name = j.value("name", "");
    f.interval = interval_from_json(j.at("interval"));
    f.obstruction = poly_from_json(j.at("obstruction"));
    if (j.contains("also_attaining")) {
      for (const auto& x : j.at("also_attaining")) f.also_attaining.push_back(poly_from_json(x));
    }
    if (j.contains("approx_interval")) f.approx_interval = interval_from_json(j.at("approx_interval"));
    const auto& factors = j.at("factors");
    if (factors.empty()) throw Error(ErrorKind::ParseError, "product has no factors");
    if (factors.front().contains("exponent")) {
      FactoredPoly powers;
      for (const auto& x : factors) {
        const Rational e = rational_field(x.at("exponent"));
        if (e.get_den() != 1) throw Error(ErrorKind::ParseError, "exponents must be integers");
        powers.emplace_back(poly_from_json(x), e.get_num());
      }
      f.product = WeightedProduct::from_exponents(powers);
      f.exponents = std::move(powers);
    } else {
      for (const auto& x : factors) f.product.factors.push_back({poly_from_json(x), rational_field(x.at("alpha"))});
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("product JSON: ") + e.what());
  }
}

json product_to_json(const ProductFixture& f) {
  json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["interval"] = interval_to_json(f.interval);
  if (f.approx_interval) j["approx_interval"] = interval_to_json(*f.approx_interval);
  j["obstruction"] = poly_to_json(f.obstruction);
  if (!f.also_attaining.empty()) {
    j["also_attaining"] = json::array();
    for (const auto& p : f.also_attaining) j["also_attaining"].push_back(poly_to_json(p));
  }
  json factors = json::array();
  if (f.exponents) {
    for (const auto& [p, e] : *f.exponents) {
      json x = poly_to_json(p);
      x["exponent"] = e.get_str();
      factors.push_back(x);
    }
  } else {
    for (const auto& w : f.product.factors) {
      json x = poly_to_json(w.poly);
      x["alpha"] = to_string(w.alpha);
      factors.push_back(x);
    }
  }
  j["factors"] = factors;
  return j;
}

CertifiedProduct certify_fixture(const ProductFixture& f, CertifyOptions options) {
  options.also_attaining.insert(options.also_attaining.end(), f.also_attaining.begin(), f.also_attaining.end());
  return certify_attainment(f.product, f.interval, f.obstruction, options);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<ProductFixture> load_products(const std::string& path) {
  const json j = read_json_file(path);
  std::vector<ProductFixture> out;
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) out.push_back(product_from_json(p));
  } else {
    out.push_back(product_from_json(j));
  }
  return out;
}

std::vector<TableRow> load_table(const std::string& path) {
  const json j = read_json_file(path);
  std::vector<TableRow> out;
  try {
    for (const auto& r : j.at("rows")) {
      TableRow row{r.at("row").get<int>(), poly_from_json(r), std::nullopt, {}};
      if (r.contains("interval")) row.interval = interval_from_json(r.at("interval"));
      for (const auto& [key, value] : r.items()) {
        if (key == "row" || key == "poly" || key == "coeffs" || key == "interval") continue;
        if (value.is_string()) row.values.emplace_back(key, parse_rational(value.get<std::string>()));
      }
      out.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return out;
}

}  // namespace intcheb
