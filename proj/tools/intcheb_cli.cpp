// intcheb: command-line front end for the intcheb library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "intcheb/bounds.hpp"
#include "intcheb/error.hpp"
#include "intcheb/io.hpp"
#include "intcheb/padic.hpp"
#include "intcheb/robinson.hpp"
#include "intcheb/special.hpp"

#ifndef INTCHEB_FIXTURES
#define INTCHEB_FIXTURES "fixtures"
#endif

using namespace intcheb;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kNegative = 3;
constexpr int kPrecisionCap = 4;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::ParseError:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::ContainsInteger:
    case ErrorKind::MonicInput:
    case ErrorKind::ReducibleOrComplex:
    case ErrorKind::AlphaOutOfRange:
    case ErrorKind::EmptyRange:
      return kInputError;
    case ErrorKind::Undecided:
    case ErrorKind::StrictMaxUndecided:
      return kPrecisionCap;
    default:
      return kNegative;
  }
}

struct Config {
  std::vector<std::string> interval;
  int degree = 2;
  std::string lead = "1";
  std::string t = "0";
  std::vector<std::string> ts;
  long precision = 4096;
  unsigned threads = 1;
  std::string out;
  std::string db;
  std::vector<std::string> products;
  std::string poly;
  std::string fixtures = INTCHEB_FIXTURES;
  bool refine = false;
  std::string b_lo = "1/100", b_hi = "1", m;
  int steps = 100;
  bool conjectural = false;
};

RatInterval interval_of(const Config& c) {
  if (c.interval.size() != 2) throw Error(ErrorKind::InvalidInput, "--interval needs LO HI");
  return parse_interval(c.interval[0], c.interval[1]);
}

// Writes to --out when given, else stdout.
template <class F>
void emit(const Config& c, F&& body) {
  if (c.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + c.out);
  body(f);
}

int run_search(const Config& c) {
  SearchCell cell{c.degree, Integer(c.lead), interval_of(c)};
  const auto polys = enumerate(cell, {c.threads});
  const auto records = sieve(polys, parse_rational(c.t));
  emit(c, [&](std::ostream& o) { write_jsonl(o, records); });
  std::cerr << polys.size() << " candidates, " << records.size() << " records\n";
  return kOk;
}

int run_verify(const Config& c) {
  if (c.products.empty()) throw Error(ErrorKind::InvalidInput, "--product is required");
  CertifyOptions opt;
  opt.max_precision = c.precision;
  int code = kOk;
  for (const auto& path : c.products) {
    for (ProductFixture f : load_products(path)) {
      const std::string name = f.name.empty() ? path : f.name;
      try {
        if (c.refine) {
          const RatInterval from = f.approx_interval ? *f.approx_interval : f.interval;
          f.interval = refine_endpoints(f.product, from, ObstructionValue::of(f.obstruction));
        }
        const CertifiedProduct cp = certify_fixture(f, opt);
        std::cout << name << ": sup_value = " << cp.sup_value.to_string() << " certified on ["
                  << to_string(cp.interval.lo) << ", " << to_string(cp.interval.hi) << "] (precision "
                  << cp.certificate.max_precision << ", " << cp.certificate.relations.size() << " relations)\n";
      } catch (const Error& e) {
        std::cout << name << ": not certified: " << e.what() << "\n";
        code = std::max(code, exit_code(e.kind()));
      }
    }
  }
  return code;
}

std::vector<ObstructionRecord> table_1_48_records(const std::string& dir) {
  std::vector<ObstructionRecord> recs;
  for (const auto& r : load_table(dir + "/table_1_48.json")) recs.push_back(make_record(r.poly));
  return recs;
}

std::vector<CertifiedProduct> table_2_products(const std::string& dir) {
  std::vector<CertifiedProduct> out;
  for (const auto& f : load_products(dir + "/table_2_products.json")) out.push_back(certify_fixture(f));
  return out;
}

int run_bounds(const Config& c) {
  EnvelopeInputs in;
  if (!c.db.empty()) {
    std::ifstream f(c.db);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + c.db);
    in.records = read_jsonl(f);
  } else {
    in.records = table_1_48_records(c.fixtures);
  }
  if (c.products.empty()) {
    in.products = table_2_products(c.fixtures);
    in.lminus_half = cover_min_gap(reflected_product_cover(in.products)).value.lower();
  } else {
    for (const auto& path : c.products) {
      for (const auto& f : load_products(path)) in.products.push_back(certify_fixture(f));
    }
  }
  std::vector<Rational> extra;
  for (const auto& s : c.ts) extra.push_back(parse_rational(s));
  const auto points = envelope(default_grid(extra), in);
  emit(c, [&](std::ostream& o) { write_csv(o, points); });
  return kOk;
}

int run_farey(const Config& c) {
  const RatInterval I = interval_of(c);
  const FareyInterval f = minimal_farey_interval(I);
  const ObstructionVerdict v = farey_max_obstruction(I);
  const std::string bracket = "[" + to_string(f.left()) + ", " + to_string(f.right()) + "]";
  std::cout << "minimal Farey interval " << bracket << "\n";
  std::cout << "maximal obstruction " << to_string(v.value) << " from " << to_string(v.polynomial) << " ("
            << to_string(v.case_tag) << ")\n";
  if (I == f.interval() && (f.c1 >= 2 || f.c2 >= 2)) {
    const ConjectureCheck chk = farey_conjecture_check(f);
    if (chk.proved) {
      std::cout << "t_M(" << bracket << ") = " << to_string(chk.value) << " (proved, witness "
                << to_string(chk.witness) << ")\n";
      return kOk;
    }
    std::cout << "t_M(" << bracket << ") = " << to_string(v.value) << " (conjectured-maximal-obstruction)\n";
    return kNegative;
  }
  return kOk;
}

int run_padic(const Config& c) {
  const IntPoly q = parse_poly(c.poly);
  const AttainmentVerdict v = attainment_obstruction(q);
  json j{{"poly", to_string(q)}, {"status", v.status_name()}, {"gcd_failure", v.gcd_failure}};
  j["failures"] = json::array();
  for (const auto& f : v.failures) {
    j["failures"].push_back({{"prime", f.prime.get_str()},
                             {"index", f.index},
                             {"required", to_string(f.required)},
                             {"actual", f.actual ? json(*f.actual) : json("inf")}});
  }
  std::cout << j.dump() << "\n";
  return v.status == AttainmentVerdict::Status::Impossible ? kNegative : kOk;
}

int run_gamma(const Config& c) {
  const Rational lo = parse_rational(c.b_lo), hi = parse_rational(c.b_hi);
  if (c.steps < 1 || lo <= 0 || hi > 1 || lo > hi) throw Error(ErrorKind::InvalidInput, "bad b range");
  emit(c, [&](std::ostream& o) {
    o << "b,m,gamma_lo,gamma_hi\n";
    for (int i = 0; i <= c.steps; ++i) {
      const Rational b = lo + (hi - lo) * i / c.steps;
      // Default m(b) = b, proven by the monic x; --conjectural uses
      // 1/ceil(1/b), the conjectured value of t_M([0, b]).
      Rational m = b;
      if (!c.m.empty()) {
        m = parse_rational(c.m);
      } else if (c.conjectural) {
        Integer k;
        const Rational inv = 1 / b;
        mpz_cdiv_q(k.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        m = Rational(1, k);
      }
      o << to_string(b) << "," << to_string(m) << ",";
      try {
        const Enclosure g = gamma_lower(b, m);
        o << format_down(g) << "," << format_up(g) << "\n";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRoot) throw;
        o << ",\n";
      }
    }
  });
  return kOk;
}

int run_tables(const Config& c) {
  const std::string& dir = c.fixtures;
  int failures = 0;
  auto report = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  // Table 1.48: the L+(1/2) cover.
  const auto recs = table_1_48_records(dir);
  const GapResult mg = cover_max_gap(translate_closed_cover(recs));
  report("table 1.48: M = " + mg.value.to_string(8) + " < 1.4715", mg.value.certainly_less(Rational(2943, 2000)));
  // Table 2: ten products and the L-(1/2) cover.
  const auto cps = table_2_products(dir);
  const GapResult ng = cover_min_gap(reflected_product_cover(cps));
  report("table 2: 10 products certify 1/2, m = " + ng.value.to_string(8) + " > 1.008848",
         ng.value.certainly_greater(parse_rational("1.008848")));
  // Table 3: spans.
  for (const auto& r : load_table(dir + "/table_3_spans.json")) {
    const Enclosure s = root_span(r.poly);
    const Rational want = r.values.front().second;
    report("table 3 row " + std::to_string(r.row) + ": span " + s.to_string(10),
           abs(s.center() - want) < Rational(1, 1000000));
  }
  // Table 4: row 1 is the table 1.48 cover constant.
  const json t4 = read_json_file(dir + "/table_4_lplus.json");
  const Rational ell1 = parse_rational(t4.at("rows").at(0).at("ell").get<std::string>());
  report("table 4 row 1: ell = " + to_string(ell1), abs(mg.value.center() - ell1) < Rational(1, 100000));
  // Table 5.
  for (const char* name : {"table5_quarter.json", "table5_third.json"}) {
    const ProductFixture f = load_products(dir + "/" + name).front();
    const CertifiedProduct cp = certify_fixture(f);
    report(std::string("table 5 ") + f.name + ": sup_value = " + cp.sup_value.to_string(), true);
  }
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monic integer transfinite diameter tools"};
  app.require_subcommand(1);
  Config c;

  auto* search = app.add_subcommand("search", "enumerate totally real candidates in a cell, sieve, emit JSONL");
  search->add_option("--interval", c.interval, "LO HI")->expected(2)->required();
  search->add_option("--degree", c.degree)->required();
  search->add_option("--lead", c.lead)->required();
  search->add_option("--t", c.t, "keep values above t");
  search->add_option("--threads", c.threads);
  search->add_option("--out", c.out);

  auto* verify = app.add_subcommand("verify", "certify sup_value for product files");
  verify->add_option("--product", c.products)->required();
  verify->add_option("--precision", c.precision, "precision cap in bits");
  verify->add_flag("--refine", c.refine, "move endpoints to the crossings of F = log m first");

  auto* bounds = app.add_subcommand("bounds", "L- and L+ envelope as CSV");
  bounds->add_option("--db", c.db, "JSONL obstruction records");
  bounds->add_option("--product", c.products, "product files (default: table 2 fixtures)");
  bounds->add_option("--t", c.ts, "extra grid points");
  bounds->add_option("--out", c.out);

  auto* farey = app.add_subcommand("farey", "Farey-interval verdicts");
  farey->add_option("--interval", c.interval, "LO HI")->expected(2)->required();

  auto* padic = app.add_subcommand("padic", "valuation test for attainment");
  padic->add_option("--poly", c.poly)->required();

  auto* gamma = app.add_subcommand("gamma", "lower bounds for gamma(b) as CSV");
  gamma->add_option("--b-lo", c.b_lo);
  gamma->add_option("--b-hi", c.b_hi);
  gamma->add_option("--steps", c.steps);
  gamma->add_option("--m", c.m, "fixed upper bound m for t_M([0, b]); default b");
  gamma->add_flag("--conjectural", c.conjectural, "use m = 1/ceil(1/b)");
  gamma->add_option("--out", c.out);

  auto* tables = app.add_subcommand("tables", "re-certify the shipped table fixtures");

  for (auto* sub : {search, verify, bounds, farey, padic, gamma, tables}) {
    sub->add_option("--fixtures", c.fixtures, "fixture directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*search) return run_search(c);
    if (*verify) return run_verify(c);
    if (*bounds) return run_bounds(c);
    if (*farey) return run_farey(c);
    if (*padic) return run_padic(c);
    if (*gamma) return run_gamma(c);
    if (*tables) return run_tables(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
