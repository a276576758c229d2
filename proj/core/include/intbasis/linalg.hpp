#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace intbasis {

// All core arithmetic is exact. Integers are arbitrary precision and
// rationals are kept in lowest terms with positive denominator, so equality
// of values is equality of representations.
using Int = mpz_class;
using Rat = mpq_class;

// Floor/ceil of a rational toward -inf / +inf.
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

class IntVector {
public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim) {}
  IntVector(std::initializer_list<long> vals);
  explicit IntVector(std::vector<Int> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  Int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;

  IntVector operator+(const IntVector& rhs) const;
  IntVector operator-(const IntVector& rhs) const;
  IntVector operator*(const Int& k) const;
  IntVector operator-() const;

  bool operator==(const IntVector& rhs) const = default;
  // Lexicographic; vectors compared in tests and canonical orders share a dim.
  std::strong_ordering operator<=>(const IntVector& rhs) const;

  // True when every entry is <= the corresponding entry of rhs.
  bool dominated_by(const IntVector& rhs) const;

  // Divides by the gcd of the entries so the result is primitive.
  // Zero vectors are returned unchanged.
  IntVector primitive() const;

  std::string str() const;

private:
  std::vector<Int> entries_;
};

class RatVector {
public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  RatVector(std::initializer_list<Rat> vals) : entries_(vals) {}
  explicit RatVector(std::vector<Rat> entries) : entries_(std::move(entries)) {}
  static RatVector from_int(const IntVector& v);

  std::size_t dim() const { return entries_.size(); }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  Rat& operator[](std::size_t i) { return entries_[i]; }

  bool operator==(const RatVector& rhs) const = default;

  // Componentwise floor; defined for every rational vector.
  IntVector floor() const;

  std::string str() const;

private:
  std::vector<Rat> entries_;
};

// Row-major dense integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntVector apply(const IntVector& x) const;   // A x
  RatVector apply(const RatVector& x) const;

  bool operator==(const IntMatrix& rhs) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

Int dot(const IntVector& a, const IntVector& b);
Rat dot_rat(const RatVector& a, const RatVector& b);
Rat dot_mixed(const IntVector& a, const RatVector& b);

// Rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const IntMatrix& m);

// Determinant of a square matrix, Bareiss elimination, exact.
Int determinant(const IntMatrix& m);

// Number of lattice points in the half-open fundamental parallelepiped of
// the columns of a nonsingular square matrix: |det|.
// Throws std::invalid_argument on non-square or singular input.
Int lattice_index(const IntMatrix& m);

// Solves M c = y for the unique rational c when y lies in the column span.
// Requires cols(M) <= rows(M) and independent columns; dependent columns are
// reported by throwing std::invalid_argument (distinct from the "no
// solution" case, which returns nullopt).
std::optional<RatVector> solve_rational(const IntMatrix& m, const IntVector& y);
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& y);

}  // namespace intbasis
