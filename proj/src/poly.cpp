#include "intcheb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "': " + why);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0) fail("numerator");
    if (den.set_str(s.substr(slash + 1), 10) != 0) fail("denominator");
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail("no digits");
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') fail("unexpected character");
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(pos + 1), &used);
      if (used != s.size() - pos - 1) fail("exponent");
    } catch (const std::logic_error&) {
      fail("exponent");
    }
  }
  Integer num(digits, 10);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  Rational q;
  if (shift >= 0) {
    q = Rational(num * ipow(10, static_cast<unsigned long>(shift)));
  } else {
    q = Rational(num, ipow(10, static_cast<unsigned long>(-shift)));
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& a1, const Integer& a0) {
  return IntPoly(std::vector<Integer>{a0, a1});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const Integer& c) {
  std::vector<Integer> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPoly pow(const IntPoly& p, unsigned long e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[i];
  return acc;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // sum a_i n^i d^(deg-i) has the sign of p(n/d) since d > 0.
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = 0;
  Integer dpow = 1;
  // Horner on the homogenized form: acc = acc*n + a_i*d^(deg-i)
  const int deg = p.degree();
  std::vector<Integer> dpows(deg + 1);
  dpows[0] = 1;
  for (int i = 1; i <= deg; ++i) dpows[i] = dpows[i - 1] * d;
  for (int i = deg; i >= 0; --i) acc = acc * n + p.coeffs()[i] * dpows[deg - i];
  return sgn(acc);
}

int sign_at_pos_inf(const IntPoly& p) { return p.is_zero() ? 0 : sgn(p.lead()); }

int sign_at_neg_inf(const IntPoly& p) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lead());
  return (p.degree() % 2 == 0) ? s : -s;
}

IntPoly derivative(const IntPoly& p, unsigned k) {
  if (p.degree() < static_cast<int>(k)) return {};
  std::vector<Integer> v(p.degree() + 1 - k);
  for (std::size_t i = k; i <= static_cast<std::size_t>(p.degree()); ++i) {
    Integer f = 1;
    for (std::size_t j = 0; j < k; ++j) f *= static_cast<unsigned long>(i - j);
    v[i - k] = p.coeffs()[i] * f;
  }
  return IntPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Content, division, gcd

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<Integer> v(p.coeffs());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo division by zero");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const int db = b.degree();
  const int delta = a.degree() - db;
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(delta + 1);
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    // multiply everything by lb, then subtract r_k x^(k-db) b
    Integer rk = r[k];
    for (auto& c : q) c *= lb;
    q[k - db] += rk;
    for (int i = 0; i < k; ++i) r[i] *= lb;
    r[k] = 0;
    for (int i = 0; i < db; ++i) {
      mpz_submul(r[k - db + i].get_mpz_t(), rk.get_mpz_t(), b.coeffs()[i].get_mpz_t());
    }
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) { return pseudo_divmod(a, b).second; }

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = IntPoly{};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  const int db = b.degree();
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(a.degree() - db + 1);
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), c.get_mpz_t(), b.coeffs()[i].get_mpz_t());
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divides(b, a, &q)) throw Error(ErrorKind::InvalidInput, to_string(b) + " does not divide " + to_string(a));
  return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  IntPoly f = primitive_part(p);
  if (f.degree() < 1) return out;
  IntPoly fp = derivative(f);
  IntPoly g = gcd(f, fp);
  if (g.degree() == 0) {
    out.push_back({f, 1});
    return out;
  }
  IntPoly c = exact_quotient(f, g);
  IntPoly d = exact_quotient(fp, g) - derivative(c);
  int i = 1;
  while (c.degree() > 0) {
    IntPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - derivative(c);
    ++i;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r = IntPoly::constant(1);
  for (const auto& sf : squarefree_decomposition(p)) r = r * sf.factor;
  return r;
}

// ---------------------------------------------------------------------------
// Resultants

Integer resultant_sylvester(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return ipow(p.lead(), static_cast<unsigned long>(n));
  if (n == 0) return ipow(q.lead(), static_cast<unsigned long>(m));
  const int size = m + n;
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) a[r][r + j] = p.coeffs()[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = q.coeffs()[n - j];
  }
  // Bareiss fraction-free elimination.
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

Integer resultant_subresultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPoly a = p;
  IntPoly b = q;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) {
    if (a.degree() == 0) return 1;
    return s * ipow(b.lead(), static_cast<unsigned long>(a.degree()));
  }
  Integer ca = content(a);
  Integer cb = content(b);
  a = IntPoly(std::vector<Integer>(a.coeffs()));
  {
    std::vector<Integer> va(a.coeffs()), vb(b.coeffs());
    for (auto& c : va) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : vb) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    a = IntPoly(std::move(va));
    b = IntPoly(std::move(vb));
  }
  Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    std::vector<Integer> vr(r.coeffs());
    for (auto& c : vr) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(vr));
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  Integer num = ipow(b.lead(), static_cast<unsigned long>(da));
  Integer den = ipow(h, static_cast<unsigned long>(da - 1));
  Integer hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
  if (std::max(p.degree(), q.degree()) > 6) return resultant_subresultant(p, q);
  return resultant_sylvester(p, q);
}

// ---------------------------------------------------------------------------
// Substitutions

IntPoly translate(const IntPoly& p, const Integer& c) {
  IntPoly shift = IntPoly::linear(1, c);
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * shift + IntPoly::constant(p.coeffs()[i]);
  return acc;
}

IntPoly reflect(const IntPoly& p, const Integer& c) {
  IntPoly sub = IntPoly::linear(-1, c);
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * sub + IntPoly::constant(p.coeffs()[i]);
  return acc;
}

IntPoly scale_roots(const IntPoly& p, const Integer& c) {
  std::vector<Integer> v(p.coeffs());
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) v[i] *= ipow(c, static_cast<unsigned long>(d - i));
  return IntPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

IntPoly parse_json_poly(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON polynomial: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorKind::ParseError, "JSON polynomial needs a \"coeffs\" array");
  }
  std::vector<Integer> v;
  for (const auto& c : j["coeffs"]) {
    Integer z;
    if (c.is_string()) {
      if (z.set_str(c.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad coefficient");
    } else if (c.is_number_integer()) {
      z = Integer(c.get<long>());
    } else {
      throw Error(ErrorKind::ParseError, "coefficients must be integers or decimal strings");
    }
    v.push_back(z);
  }
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_poly(text);

  std::vector<Integer> coeffs;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " at position " + std::to_string(i) + " in '" + std::string(text) + "'");
  };
  auto read_digits = [&](std::string& out) {
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
  };
  bool any_term = false;
  skip_ws();
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any_term) {
      fail("expected '+' or '-'");
    }
    std::string digits;
    read_digits(digits);
    skip_ws();
    if (i < n && text[i] == '*') {
      if (digits.empty()) fail("'*' without coefficient");
      ++i;
      skip_ws();
    }
    std::size_t exponent = 0;
    bool has_x = false;
    if (i < n && (text[i] == 'x' || text[i] == 'X')) {
      has_x = true;
      ++i;
      exponent = 1;
      skip_ws();
      bool caret = false;
      if (i < n && text[i] == '^') {
        caret = true;
        ++i;
      } else if (i + 1 < n && text[i] == '*' && text[i + 1] == '*') {
        caret = true;
        i += 2;
      }
      skip_ws();
      std::string exp_digits;
      read_digits(exp_digits);
      if (caret && exp_digits.empty()) fail("missing exponent");
      if (!exp_digits.empty()) exponent = std::stoul(exp_digits);
    }
    if (digits.empty() && !has_x) fail("expected a term");
    Integer c = digits.empty() ? Integer(1) : Integer(digits, 10);
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += sign * c;
    any_term = true;
    skip_ws();
  }
  if (!any_term) fail("empty polynomial");
  return IntPoly(std::move(coeffs));
}

}  // namespace intcheb
