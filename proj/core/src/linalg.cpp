#include "intbasis/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace intbasis {

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

IntVector::IntVector(std::initializer_list<long> vals) {
  entries_.reserve(vals.size());
  for (long v : vals) entries_.emplace_back(v);
}

bool IntVector::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

IntVector IntVector::operator+(const IntVector& rhs) const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] + rhs[i];
  return out;
}

IntVector IntVector::operator-(const IntVector& rhs) const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] - rhs[i];
  return out;
}

IntVector IntVector::operator*(const Int& k) const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] * k;
  return out;
}

IntVector IntVector::operator-() const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = -entries_[i];
  return out;
}

std::strong_ordering IntVector::operator<=>(const IntVector& rhs) const {
  if (dim() != rhs.dim()) return dim() <=> rhs.dim();
  for (std::size_t i = 0; i < dim(); ++i) {
    int c = cmp(entries_[i], rhs[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool IntVector::dominated_by(const IntVector& rhs) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (entries_[i] > rhs[i]) return false;
  return true;
}

IntVector IntVector::primitive() const {
  Int g = 0;
  for (const Int& e : entries_) g = gcd(g, e);
  if (g == 0 || g == 1) return *this;
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] / g;
  return out;
}

std::string IntVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

RatVector RatVector::from_int(const IntVector& v) {
  RatVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rat(v[i]);
  return out;
}

IntVector RatVector::floor() const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = floor_rat(entries_[i]);
  return out;
}

std::string RatVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  IntMatrix m(cols[0].dim(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != m.rows())
      throw std::invalid_argument("from_columns: dimension mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  IntVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

RatVector IntMatrix::apply(const RatVector& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += Rat(at(i, j)) * x[j];
    out[i] = acc;
  }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot_rat(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot_mixed(const IntVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

namespace {

// Bareiss fraction-free elimination with column pivoting. Returns the rank;
// when det_out is non-null the matrix must be square and the signed
// determinant is written there.
std::size_t bareiss(IntMatrix work, Int* det_out) {
  const std::size_t m = work.rows();
  const std::size_t n = work.cols();
  Int prev_pivot = 1;
  int sign = 1;
  std::size_t rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m && work.at(sel, col) == 0) ++sel;
    if (sel == m) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < n; ++j) swap(work.at(sel, j), work.at(pivot_row, j));
      sign = -sign;
    }
    const Int pivot = work.at(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Int num = work.at(i, j) * pivot - work.at(i, col) * work.at(pivot_row, j);
        // Exact division by the previous pivot (Bareiss invariant).
        work.at(i, j) = num / prev_pivot;
      }
      work.at(i, col) = 0;
    }
    prev_pivot = pivot;
    ++pivot_row;
    ++rank;
  }
  if (det_out) {
    if (m != n) throw std::invalid_argument("determinant: matrix not square");
    if (rank < n)
      *det_out = 0;
    else
      *det_out = sign * prev_pivot;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& m) { return bareiss(m, nullptr); }

Int determinant(const IntMatrix& m) {
  Int det;
  bareiss(m, &det);
  return det;
}

Int lattice_index(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("lattice_index: matrix not square");
  Int det = determinant(m);
  if (det == 0) throw std::invalid_argument("lattice_index: singular matrix");
  return abs(det);
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const IntVector& y) {
  return solve_rational(m, RatVector::from_int(y));
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& y) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (y.dim() != rows) throw std::invalid_argument("solve_rational: dimension mismatch");
  if (cols > rows)
    throw std::invalid_argument("solve_rational: more columns than rows");

  // Rational Gaussian elimination on the augmented system [M | y].
  std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = Rat(m.at(i, j));
    aug[i][cols] = y[i];
  }

  std::vector<std::size_t> pivot_of_col(cols);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && aug[sel][col] == 0) ++sel;
    if (sel == rows)
      throw std::invalid_argument("solve_rational: columns are linearly dependent");
    std::swap(aug[sel], aug[pivot_row]);
    const Rat pivot = aug[pivot_row][col];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || aug[i][col] == 0) continue;
      Rat factor = aug[i][col] / pivot;
      for (std::size_t j = col; j <= cols; ++j) aug[i][j] -= factor * aug[pivot_row][j];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }

  // Rows below the pivot block must have zero residual for consistency.
  for (std::size_t i = pivot_row; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;

  RatVector c(cols);
  for (std::size_t col = 0; col < cols; ++col)
    c[col] = aug[pivot_of_col[col]][cols] / aug[pivot_of_col[col]][col];
  return c;
}

}  // namespace intbasis
