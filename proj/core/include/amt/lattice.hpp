#pragma once

// Exact integer linear algebra: Smith normal form and the kernels, saturations
// and integer solves built on top of it. Everything is arbitrary precision.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace amt {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major integer matrix. Zero-sized dimensions are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// U * A * V == D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... | d_k, all d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  // Diagonal of D, length min(rows, cols).
  IntVector invariant_factors() const;
};

// Pivot is the nonzero entry of smallest absolute value in the active block,
// ties broken by (row, col) order, so the decomposition is reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);

// Lattice basis of {v : A v = 0}: the columns of V whose diagonal entry in D
// is zero, in V's column order.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Basis of span_Q(vectors) ∩ Z^n, computed as the kernel of the kernel.
// All vectors must share one length.
std::vector<IntVector> saturate(const std::vector<IntVector>& vectors);

// Some integer x with A x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

// Some rational x with A x = b (free variables set to zero), or nullopt.
std::optional<RatVector> solve_rational(const IntMatrix& a, const IntVector& b);

Integer dot(const IntVector& a, const IntVector& b);
Integer gcd_of(const IntVector& v);
bool is_primitive(const IntVector& v);

}  // namespace amt
