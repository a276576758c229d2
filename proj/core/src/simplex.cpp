#include "intbasis/simplex.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace intbasis {

namespace {

// Dense full-tableau simplex. Columns [0, num_all) include any artificials;
// each basic column is kept as a unit column of the tableau.
class Tableau {
public:
  Tableau(const std::vector<RatVector>& a_rows, const RatVector& b)
      : m_(a_rows.size()), n_(m_ ? a_rows[0].dim() : b.dim()) {
    if (b.dim() != m_) throw std::invalid_argument("simplex: rhs dimension mismatch");
    rows_.assign(m_, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a_rows[i].dim() != n_) throw std::invalid_argument("simplex: ragged rows");
      int flip = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip * a_rows[i][j];
      rows_[i][n_ + i] = 1;  // artificial
      rows_[i].back() = flip * b[i];
      basis_[i] = n_ + i;
    }
  }

  // Returns false when phase 1 ends with a positive artificial residue.
  bool phase1() {
    // Objective: maximize -(sum of artificials).
    std::vector<Rat> obj(n_ + m_ + 1, Rat(0));
    for (std::size_t j = n_; j < n_ + m_; ++j) obj[j] = -1;
    price_out(obj);
    run(obj, n_ + m_);
    if (obj.back() != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 over the structural columns only. Returns false on unbounded.
  bool phase2(const RatVector& c) {
    std::vector<Rat> obj(n_ + m_ + 1, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) obj[j] = c[j];
    price_out(obj);
    return run(obj, n_);
  }

  RatVector solution() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i].back();
    return x;
  }

private:
  // Rewrites the objective row in terms of the current nonbasic variables.
  void price_out(std::vector<Rat>& obj) {
    for (std::size_t i = 0; i < m_; ++i) {
      const Rat coeff = obj[basis_[i]];
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < n_ + m_ + 1; ++j) obj[j] -= coeff * rows_[i][j];
    }
  }

  // Bland's rule; limit = number of columns eligible to enter.
  // The objective row holds reduced costs negated in the usual sense: we
  // enter on obj[j] > 0 and maintain obj.back() = -(objective value).
  bool run(std::vector<Rat>& obj, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) {
        obj.back() = -obj.back();
        return true;  // optimal; obj.back() now holds the value
      }
      std::size_t leave = m_;
      Rat best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i].back() / rows_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter, obj);
    }
  }

  void pivot(std::size_t row, std::size_t col, std::vector<Rat>& obj) {
    const Rat p = rows_[row][col];
    for (Rat& v : rows_[row]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rat f = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[row][j];
    }
    if (obj[col] != 0) {
      const Rat f = obj[col];
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  // After a feasible phase 1, replace basic artificials by structural
  // columns; rows with no structural pivot are redundant and zeroed.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == n_) {
        // Redundant constraint; keep the zero row with its artificial basic
        // at value zero. It can never be chosen by the ratio test again.
        continue;
      }
      std::vector<Rat> dummy(n_ + m_ + 1, Rat(0));
      pivot(i, col, dummy);
    }
    // Artificials are no longer eligible to enter (phase 2 limit excludes
    // them), so nothing else is needed.
  }

  std::size_t m_, n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution simplex_maximize(const std::vector<RatVector>& a_rows,
                            const RatVector& b, const RatVector& c) {
  Tableau t(a_rows, b);
  if (!t.phase1()) return {LpStatus::Infeasible, RatVector(), Rat(0)};
  if (!t.phase2(c)) return {LpStatus::Unbounded, RatVector(), Rat(0)};
  RatVector x = t.solution();
  Rat value = 0;
  for (std::size_t j = 0; j < c.dim(); ++j) value += c[j] * x[j];
  return {LpStatus::Optimal, x, value};
}

std::optional<RatVector> simplex_feasible_point(const std::vector<RatVector>& a_rows,
                                                const RatVector& b) {
  Tableau t(a_rows, b);
  if (!t.phase1()) return std::nullopt;
  return t.solution();
}

std::optional<RatVector> nonneg_combination(const std::vector<IntVector>& generators,
                                            const RatVector& target) {
  const std::size_t n = target.dim();
  const std::size_t k = generators.size();
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i)
      if (target[i] != 0) return std::nullopt;
    return RatVector(0);
  }
  std::vector<RatVector> rows(n, RatVector(k));
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].dim() != n)
      throw std::invalid_argument("nonneg_combination: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = Rat(generators[j][i]);
  }
  return simplex_feasible_point(rows, target);
}

std::optional<IntVector> strict_separator(const std::vector<IntVector>& generators) {
  if (generators.empty()) return IntVector(0);
  const std::size_t n = generators[0].dim();
  const std::size_t k = generators.size();
  // Variables: u (n), w (n), slack s (k); c = u - w, and for each generator
  // g: (u - w) . g - s_i = 1.
  std::vector<RatVector> rows(k, RatVector(2 * n + k));
  RatVector b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = Rat(generators[i][j]);
      rows[i][n + j] = Rat(-generators[i][j]);
    }
    rows[i][2 * n + i] = -1;
    b[i] = 1;
  }
  auto sol = simplex_feasible_point(rows, b);
  if (!sol) return std::nullopt;
  RatVector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = (*sol)[j] - (*sol)[n + j];
  Int scale = 1;
  for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, c[j].get_den());
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat scaled = c[j] * Rat(scale);
    out[j] = scaled.get_num();
  }
  return out;
}

}  // namespace intbasis
