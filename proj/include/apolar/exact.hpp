#pragma once

// Exact linear algebra over the rationals.
//
// Elimination is fraction-free (Bareiss): each row is first scaled to
// integers, and every intermediate entry is a minor of the input, so the
// growth of the integers stays polynomial in the matrix size.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of reduced rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  /// Builds a matrix from rows; all rows must have the same length.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  /// Builds a matrix whose columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalMatrix transpose() const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const;

  /// Appends the rows of `other` below this matrix (column counts must agree).
  RationalMatrix stacked(const RationalMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of the right null space; each vector is scaled to a primitive
/// integer vector whose last nonzero entry is positive.
std::vector<RationalVector> kernel_exact(const RationalMatrix& m);

std::size_t rank_exact(const RationalMatrix& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_exact(const RationalMatrix& m, const RationalVector& b);

/// Rank of the span of a list of vectors of equal length.
std::size_t span_rank(const std::vector<RationalVector>& vectors, std::size_t length);

/// True when span(inner) is contained in span(outer).
bool span_contains(const std::vector<RationalVector>& outer,
                   const std::vector<RationalVector>& inner, std::size_t length);

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);
std::string to_string(const Rational& q);

}  // namespace apolar
