#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sgeo::lp {

enum class Status { optimal, infeasible, unbounded, cutoff };

template <class Field>
struct Solution {
  Status status = Status::infeasible;
  Field value{};
  std::vector<Field> primal;  // x, one entry per column
  std::vector<Field> dual;    // y, one entry per row (optimal status only)
};

// Exact dense-tableau simplex for
//     maximize c.x  subject to  A x <= b,  x >= 0
// over any ordered field. Pivoting follows Bland's rule (smallest entering
// label, ties in the ratio test by smallest basic label), so it terminates
// without tolerances. Negative right-hand sides are handled by a first phase
// with one auxiliary column.
template <class Field>
class ExactSimplex {
 public:
  using Matrix = std::vector<std::vector<Field>>;

  ExactSimplex(const Matrix& a, const std::vector<Field>& b, const std::vector<Field>& c)
      : m_{static_cast<int>(b.size())}, n_{static_cast<int>(c.size())}, basic_(m_), nonbasic_(n_ + 1),
        d_(m_ + 2, std::vector<Field>(n_ + 2, Field(0))) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = Field(-1);
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = Field(1);
  }

  // Stops early (status cutoff) once a feasible basis reaches `cutoff`.
  Solution<Field> solve(std::optional<Field> cutoff = std::nullopt) {
    Solution<Field> out;
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    if (m_ > 0 && d_[r][n_ + 1] < Field(0)) {
      pivot(r, n_);
      if (!run(2, std::nullopt) || d_[m_ + 1][n_ + 1] < Field(0)) {
        out.status = Status::infeasible;
        return out;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j)
          if (d_[i][j] != Field(0) && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        if (s != -1) pivot(i, s);
      }
    }
    const Outcome phase2 = run(1, cutoff) ? Outcome::done : Outcome::unbounded;
    out.primal.assign(n_, Field(0));
    for (int i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && basic_[i] < n_) out.primal[basic_[i]] = d_[i][n_ + 1];
    out.value = d_[m_][n_ + 1];
    if (phase2 == Outcome::unbounded) {
      out.status = Status::unbounded;
    } else if (stopped_) {
      out.status = Status::cutoff;
    } else {
      out.status = Status::optimal;
      out.dual.assign(m_, Field(0));
      for (int j = 0; j <= n_; ++j)
        if (nonbasic_[j] >= n_) out.dual[nonbasic_[j] - n_] = d_[m_][j];
    }
    return out;
  }

 private:
  enum class Outcome { done, unbounded };

  void pivot(int r, int s) {
    const Field inv = Field(1) / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == Field(0)) continue;
      const Field factor = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j)
        if (d_[r][j] != Field(0)) d_[i][j] -= d_[r][j] * factor;
      d_[i][s] = d_[r][s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) d_[r][j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) d_[i][s] *= -inv;
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // phase 2 optimizes the auxiliary row, phase 1 the real objective.
  bool run(int phase, const std::optional<Field>& cutoff) {
    const int x = m_ + phase - 1;
    for (;;) {
      if (cutoff && d_[m_][n_ + 1] >= *cutoff) {
        stopped_ = true;
        return true;
      }
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase || !(d_[x][j] < Field(0))) continue;
        if (s == -1 || nonbasic_[j] < nonbasic_[s]) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Field best_ratio{};
      for (int i = 0; i < m_; ++i) {
        if (!(d_[i][s] > Field(0))) continue;
        const Field ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[r])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  Matrix d_;
  bool stopped_ = false;
};

}  // namespace sgeo::lp
