#pragma once

// Bounds on L-(t) = inf{|I| : t_M(I) > t} and L+(t) = sup{|I| : t_M(I) <= t}.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "intcheb/cheb_search.hpp"
#include "intcheb/robinson.hpp"

namespace intcheb {

/// One interval of a cover system. Its true endpoints lie in `left` and
/// `right` (exact intervals of width zero for certified products).
struct CoverEntry {
  RatInterval left;
  RatInterval right;
  std::string label;

  static CoverEntry of_record(const ObstructionRecord& r, std::string label);
  static CoverEntry of_interval(const RatInterval& I, std::string label);
  CoverEntry translated(const Integer& k) const;
};

struct CoverSystem {
  std::vector<CoverEntry> entries;
};

struct GapResult {
  /// Enclosure of the extremal gap; its upper (max) or lower (min) end is the
  /// certified bound.
  Enclosure value;
  /// Indices i (into the sorted entries) of pairs (i, i+1) that may attain it.
  std::vector<std::size_t> extremal;
  /// Entries sorted by left endpoint.
  std::vector<CoverEntry> sorted;
};

/// The records in order, labelled by 1-based row, then the first translated
/// by +1 to close the system.
CoverSystem translate_closed_cover(const std::vector<ObstructionRecord>& records);
/// I_1..I_n, then 1 - I_n, ..., 1 - I_1, then I_1 + 1.
CoverSystem reflected_product_cover(const std::vector<CertifiedProduct>& products);

/// L-(t) <= span of an obstruction with value > t. Throws ValueNotAboveT.
Enclosure lminus_upper(const ObstructionRecord& rec, const Rational& t);

/// M = max (b_{i+1} - a_i); L+(t) <= M when every entry is an obstruction
/// root range with value > t. Throws MissingTranslateClosure unless the last
/// left endpoint is exactly the first plus one.
GapResult cover_max_gap(const CoverSystem& cover);
/// m = min (b_i - a_{i+1}); L-(t) >= m when every entry carries a product
/// with sup <= t.
GapResult cover_min_gap(const CoverSystem& cover);

/// Max-gap bound from arbitrary obstruction root ranges, reduced mod 1: for
/// each a_j, the least b_i - a_j over the entries starting after a_j.
Enclosure cover_gap_mod1(const std::vector<ObstructionRecord>& records);

/// |I| as a lower bound for L+(t), t = sup value of the product.
Enclosure lplus_lower(const CertifiedProduct& product);

/// Root of 4 a^a (1-a)^(1-a) = 5^a in (0, 1), width <= 1e-6.
Enclosure alpha_star();
/// ln 4 / ln 5
Enclosure alpha_max(mpfr_prec_t prec = 128);
/// l_alpha: root of (1-a) ln|1 - y^2| + a ln|1 - y^2/5| = 0 on the branch
/// (sqrt 5, inf) for a > a*, least root in (1, sqrt 5) otherwise.
/// Certifies L+(5^(a/2)/2) >= l_alpha. Throws AlphaOutOfRange.
Enclosure ell_alpha(const Rational& alpha);

struct BoundPoint {
  Rational t;
  std::optional<Enclosure> lminus_lo, lminus_hi, lplus_lo, lplus_hi;
};

struct EnvelopeInputs {
  std::vector<ObstructionRecord> records;
  std::vector<CertifiedProduct> products;
  /// The certified min-gap constant for t = 1/2, when available.
  std::optional<Rational> lminus_half;
};

std::vector<BoundPoint> envelope(const std::vector<Rational>& grid, const EnvelopeInputs& in);
/// Uniform 1/100 steps on [1/2, 1] plus the extra points, sorted, unique.
std::vector<Rational> default_grid(const std::vector<Rational>& extra = {});

/// Header "t,lminus_lo,lminus_hi,lplus_lo,lplus_hi"; lower columns rounded
/// down, upper columns up, 10 significant digits.
void write_csv(std::ostream& out, const std::vector<BoundPoint>& points);

/// t_M(I) = 1/2 when 1 <= |I| < m: a half-integer lies in I, and L-(1/2) >= m.
/// Returns false when the length is outside that window.
bool length_one_value_is_half(const RatInterval& I, const Rational& m);

}  // namespace intcheb
