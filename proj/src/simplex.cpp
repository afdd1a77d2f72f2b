#include "intcheb/simplex.hpp"

#include <limits>
#include <utility>

#include "intcheb/error.hpp"

namespace intcheb {

namespace {

constexpr double kEps = 1e-11;

// Dictionary tableau: rows 0..m-1 constraints, row m objective, row m+1 the
// phase-one objective; column n is the artificial variable, n+1 the rhs.
// Bland's rule for both choices, so cycling cannot occur.
class Dictionary {
 public:
  Dictionary(const std::vector<std::vector<double>>& A, const std::vector<double>& b, const std::vector<double>& c)
      : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())), basic_(m_), nonbasic_(n_ + 1),
        d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = A[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LpResult solve() {
    LpResult res;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!run(1) || d_[m_ + 1][n_ + 1] < -kEps) return res;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (s == -1 || d_[i][j] < d_[i][s] || (d_[i][j] == d_[i][s] && nonbasic_[j] < nonbasic_[s])) s = j;
        }
        pivot(i, s);
      }
    }
    if (!run(2)) {
      res.status = LpResult::Status::Unbounded;
      return res;
    }
    res.status = LpResult::Status::Optimal;
    res.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) res.x[basic_[i]] = d_[i][n_ + 1];
    }
    res.value = d_[m_][n_ + 1];
    return res;
  }

 private:
  void pivot(int r, int s) {
    const double inv = 1.0 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0.0) continue;
      const double f = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (j != s) d_[i][j] -= d_[r][j] * f;
      }
      d_[i][s] = -f;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_[r][j] *= inv;
    }
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool run(int phase) {
    const int x = phase == 1 ? m_ + 1 : m_;
    while (true) {
      // Bland: the improving variable of least index enters.
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasic_[j] == -1) continue;
        if (d_[x][j] >= -kEps) continue;
        if (s == -1 || nonbasic_[j] < nonbasic_[s]) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] < kEps) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        const double lhs = d_[i][n_ + 1] / d_[i][s];
        const double rhs = d_[r][n_ + 1] / d_[r][s];
        if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_, n_;
  std::vector<int> basic_, nonbasic_;
  std::vector<std::vector<double>> d_;
};

}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c) {
  if (A.size() != b.size()) throw Error(ErrorKind::InvalidInput, "constraint matrix and rhs sizes differ");
  for (const auto& row : A) {
    if (row.size() != c.size()) throw Error(ErrorKind::InvalidInput, "constraint row has the wrong length");
  }
  return Dictionary(A, b, c).solve();
}

}  // namespace intcheb
