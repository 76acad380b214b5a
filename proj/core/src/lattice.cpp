#include "amt/lattice.hpp"

#include <algorithm>

#include "amt/error.hpp"

namespace amt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("IntMatrix::from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw DimensionError("IntMatrix::from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("IntMatrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw DimensionError("IntMatrix * vector: length mismatch");
  IntVector out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? " [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(D.rows(), D.cols());
  while (r < k && D(r, r) != 0) ++r;
  return r;
}

IntVector SmithDecomposition::invariant_factors() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  IntVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = D(i, i);
  return out;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

// First entry of the trailing block not divisible by the pivot at (t, t).
std::optional<std::size_t> non_divisible_row(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(i, j) % d(t, t) != 0) return i;
  return std::nullopt;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    auto pivot = smallest_nonzero(d, t);
    if (!pivot) break;
    d.swap_rows(t, pivot->row);
    u.swap_rows(t, pivot->row);
    d.swap_columns(t, pivot->col);
    v.swap_columns(t, pivot->col);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (d(i, t) == 0) continue;
      Integer q = d(i, t) / d(t, t);
      d.add_row_multiple(i, t, -q);
      u.add_row_multiple(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d(t, j) == 0) continue;
      Integer q = d(t, j) / d(t, t);
      d.add_column_multiple(j, t, -q);
      v.add_column_multiple(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder now exists; re-pivot

    if (auto bad = non_divisible_row(d, t)) {
      d.add_row_multiple(t, *bad, 1);
      u.add_row_multiple(t, *bad, 1);
      continue;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return SmithDecomposition{std::move(u), std::move(d), std::move(v)};
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t c = snf.rank(); c < a.cols(); ++c) basis.push_back(snf.V.column(c));
  return basis;
}

std::vector<IntVector> saturate(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  const auto orthogonal = integer_kernel(IntMatrix::from_rows(vectors, n));
  return integer_kernel(IntMatrix::from_rows(orthogonal, n));
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_integer: right-hand side length mismatch");
  const SmithDecomposition snf = smith_normal_form(a);
  const IntVector c = snf.U * b;
  const std::size_t r = snf.rank();
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (c[i] % snf.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_rational: right-hand side length mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<RatVector> aug(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && aug[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[row]);
    const Rational lead = aug[row][col];
    for (auto& x : aug[row]) x /= lead;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][n];
  return x;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const IntVector& v) { return gcd_of(v) == 1; }

}  // namespace amt
