#pragma once

// Dense two-phase simplex in double precision:
// maximize c^T x subject to A x <= b, x >= 0.

#include <vector>

namespace intcheb {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  double value = 0;
  std::vector<double> x;
};

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace intcheb
