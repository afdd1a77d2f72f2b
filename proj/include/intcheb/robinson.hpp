#pragma once

// Robinson's enumeration of integer polynomials with all roots real and in a
// box I0, and the sieve down to obstruction records.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "intcheb/obstruction.hpp"
#include "intcheb/real_roots.hpp"

namespace intcheb {

struct SearchCell {
  int degree;
  Integer lead;
  RatInterval box;
};

struct IntRange {
  Integer lo;
  Integer hi;
};

/// Range for a_k given the fixed coefficients a_d..a_{k+1} (the prefix, with
/// zero coefficients below x^(k+1)). Requires the (k+1)-th derivative of the
/// prefix to have all roots in I0. Never excludes a valid value.
/// Throws EmptyRange when no integer survives.
IntRange coefficient_range(const IntPoly& prefix, int k, const RatInterval& I0);

struct EnumerateOptions {
  unsigned threads = 1;
};

/// Every polynomial of the cell's degree and lead with all roots in the box,
/// in the order of operator<=>.
std::vector<IntPoly> enumerate(const SearchCell& cell, const EnumerateOptions& options = {});

struct ObstructionRecord {
  IntPoly poly;
  ObstructionValue value;
  Enclosure span;
  /// Outward [min root, max root].
  RatInterval root_range;
  /// Isolating boxes of the extreme roots.
  RootBox min_root;
  RootBox max_root;
};

/// Record for an irreducible polynomial with all roots real; extreme roots
/// refined to width eps.
ObstructionRecord make_record(const IntPoly& p, const Rational& eps = Rational("1/1000000000000"));

/// Irreducible, content-1, value > t; within each (degree, lead) a record
/// whose root range contains another kept record's range is dropped.
std::vector<ObstructionRecord> sieve(const std::vector<IntPoly>& polys, const Rational& t);

/// One JSON object per line.
std::string to_jsonl(const ObstructionRecord& r);
void write_jsonl(std::ostream& out, const std::vector<ObstructionRecord>& records);
std::vector<ObstructionRecord> read_jsonl(std::istream& in);

}  // namespace intcheb
