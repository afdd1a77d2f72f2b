#include "intcheb/robinson.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "intcheb/error.hpp"
#include "intcheb/factor.hpp"

namespace intcheb {

namespace {

Integer factorial(int k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

Integer ceil_div(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer floor_div(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

struct Bounds {
  std::optional<Integer> lo, hi;
  void at_least(const Integer& v) {
    if (!lo || v > *lo) lo = v;
  }
  void at_most(const Integer& v) {
    if (!hi || v < *hi) hi = v;
  }
};

// sigma * (kf * a + s) >= 0 for s enclosed in [s_lo, s_hi].
void impose(Bounds& b, int sigma, const Integer& kf, const Rational& s_lo, const Rational& s_hi) {
  if (sigma > 0) {
    b.at_least(ceil_div(-s_hi / kf));
  } else {
    b.at_most(floor_div(-s_lo / kf));
  }
}

void descend(const IntPoly& prefix, int k, const RatInterval& I0, std::vector<IntPoly>& out) {
  IntRange r;
  try {
    r = coefficient_range(prefix, k, I0);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyRange) return;
    throw;
  }
  for (Integer a = r.lo; a <= r.hi; ++a) {
    const IntPoly p = prefix + IntPoly::monomial(a, static_cast<std::size_t>(k));
    if (k == 0) {
      if (all_roots_in(p, I0)) out.push_back(p);
    } else {
      descend(p, k - 1, I0, out);  // coefficient_range rejects a bad derivative
    }
  }
}

}  // namespace

IntRange coefficient_range(const IntPoly& prefix, int k, const RatInterval& I0) {
  const int d = prefix.degree();
  if (k < 0 || k >= d) throw Error(ErrorKind::InvalidInput, "coefficient index out of range");
  for (int i = 0; i <= k; ++i) {
    if (prefix.coeffs()[i] != 0) throw Error(ErrorKind::InvalidInput, "prefix must vanish below x^(k+1)");
  }
  const IntPoly s = derivative(prefix, static_cast<unsigned>(k));
  const IntPoly d1 = derivative(prefix, static_cast<unsigned>(k + 1));
  const Integer kf = factorial(k);
  const int n = d - k;
  const int lead_sign = prefix.lead() > 0 ? 1 : -1;
  Bounds b;

  const Rational s_r = evaluate(s, I0.hi);
  impose(b, lead_sign, kf, s_r, s_r);
  const Rational s_l = evaluate(s, I0.lo);
  impose(b, (n % 2 == 0 ? 1 : -1) * lead_sign, kf, s_l, s_l);

  if (d1.degree() >= 1) {
    if (!all_roots_in(d1, I0)) throw Error(ErrorKind::EmptyRange, "derivative has roots outside I0");
    // Distinct roots of d1 with multiplicities, in increasing order.
    struct Root {
      RootBox box;
      int mult;
    };
    std::vector<Root> roots;
    for (const auto& sf : squarefree_decomposition(d1)) {
      for (const RootBox& box : isolate_roots(sf.factor)) roots.push_back({box, sf.multiplicity});
    }
    std::sort(roots.begin(), roots.end(), [](Root& x, Root& y) { return compare_roots(x.box, y.box) < 0; });
    Rational eps(1);
    mpz_mul_2exp(eps.get_den_mpz_t(), eps.get_den_mpz_t(), 32);
    int above = 0;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      const Enclosure sv = eval_ball(s, refine(it->box, eps).enclosure(96));
      const Rational lo = sv.lower();
      const Rational hi = sv.upper();
      const int sigma = ((above + 1) % 2 == 0 ? 1 : -1) * lead_sign;
      impose(b, sigma, kf, lo, hi);
      if (it->mult >= 2) impose(b, -sigma, kf, lo, hi);
      above += it->mult;
    }
  }
  if (!b.lo || !b.hi || *b.lo > *b.hi) throw Error(ErrorKind::EmptyRange, "no admissible coefficient");
  return {*b.lo, *b.hi};
}

std::vector<IntPoly> enumerate(const SearchCell& cell, const EnumerateOptions& options) {
  if (cell.degree < 1) throw Error(ErrorKind::InvalidInput, "degree must be at least 1");
  if (cell.lead < 1) throw Error(ErrorKind::InvalidInput, "lead must be at least 1");
  const IntPoly top = IntPoly::monomial(cell.lead, static_cast<std::size_t>(cell.degree));
  const int k = cell.degree - 1;
  IntRange r;
  try {
    r = coefficient_range(top, k, cell.box);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyRange) return {};
    throw;
  }
  std::vector<Integer> firsts;
  for (Integer a = r.lo; a <= r.hi; ++a) firsts.push_back(a);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(firsts.size())));
  std::vector<std::vector<IntPoly>> parts(workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < firsts.size(); i += workers) {
      const IntPoly p = top + IntPoly::monomial(firsts[i], static_cast<std::size_t>(k));
      if (k == 0) {
        if (all_roots_in(p, cell.box)) parts[w].push_back(p);
      } else {
        descend(p, k - 1, cell.box, parts[w]);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<IntPoly> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

ObstructionRecord make_record(const IntPoly& p, const Rational& eps) {
  const std::vector<RootBox> boxes = isolate_roots(p);
  if (p.degree() < 1 || static_cast<int>(boxes.size()) != p.degree()) {
    throw Error(ErrorKind::ComplexRoots, to_string(p) + " does not have distinct real roots only");
  }
  const RootBox lo = refine(boxes.front(), eps);
  const RootBox hi = refine(boxes.back(), eps);
  Rational span_lo = hi.interval.lo - lo.interval.hi;
  if (span_lo < 0) span_lo = 0;
  return {p, ObstructionValue::of(p), Enclosure::hull(span_lo, hi.interval.hi - lo.interval.lo, 128),
          RatInterval(lo.interval.lo, hi.interval.hi), lo, hi};
}

std::vector<ObstructionRecord> sieve(const std::vector<IntPoly>& polys, const Rational& t) {
  std::vector<ObstructionRecord> cand;
  std::vector<IntPoly> sorted(polys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& p : sorted) {
    if (p.degree() < 1 || p.lead() < 2 || content(p) != 1) continue;
    if (!ObstructionValue::of(p).exceeds(t)) continue;
    if (!is_irreducible(p)) continue;
    if (count_real_roots(p) != p.degree()) continue;
    cand.push_back(make_record(p));
  }
  std::vector<ObstructionRecord> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cand.size() && !dominated; ++j) {
      if (i == j || cand[i].poly.degree() != cand[j].poly.degree() || cand[i].poly.lead() != cand[j].poly.lead()) {
        continue;
      }
      RootBox a_lo = cand[i].min_root, a_hi = cand[i].max_root;
      RootBox b_lo = cand[j].min_root, b_hi = cand[j].max_root;
      dominated = compare_roots(a_lo, b_lo) <= 0 && compare_roots(b_hi, a_hi) <= 0;
    }
    if (!dominated) out.push_back(cand[i]);
  }
  return out;
}

std::string to_jsonl(const ObstructionRecord& r) {
  nlohmann::ordered_json j;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& c : r.poly.coeffs()) j["coeffs"].push_back(c.get_str());
  j["lead"] = r.poly.lead().get_str();
  j["degree"] = r.poly.degree();
  j["root_lo"] = to_string(r.root_range.lo);
  j["root_hi"] = to_string(r.root_range.hi);
  j["span_lo"] = to_string(r.span.lower());
  j["span_hi"] = to_string(r.span.upper());
  return j.dump();
}

void write_jsonl(std::ostream& out, const std::vector<ObstructionRecord>& records) {
  for (const auto& r : records) out << to_jsonl(r) << '\n';
}

std::vector<ObstructionRecord> read_jsonl(std::istream& in) {
  std::vector<ObstructionRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      std::vector<Integer> coeffs;
      for (const auto& c : j.at("coeffs")) {
        coeffs.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
      }
      out.push_back(make_record(IntPoly(std::move(coeffs))));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace intcheb
