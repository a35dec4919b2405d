#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wbd/error.hpp"
#include "wbd/scalar.hpp"

namespace wbd {

/// Coordinate vector. Algebra elements are represented by their coordinates
/// on the algebra's basis.
template <ExactField K>
using Vec = std::vector<K>;

template <ExactField K>
Vec<K> zero_vector(std::size_t n) {
  return Vec<K>(n, K(0));
}

template <ExactField K>
Vec<K> unit_vector(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

template <ExactField K>
bool is_zero(std::span<const K> v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <ExactField K>
bool is_zero(const Vec<K>& v) {
  return is_zero(std::span<const K>(v));
}

template <ExactField K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) fail(ErrorKind::dimension_mismatch, "vector sum of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <ExactField K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) fail(ErrorKind::dimension_mismatch, "vector difference of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <ExactField K>
Vec<K> operator-(Vec<K> a) {
  for (K& x : a) x = -x;
  return a;
}

template <ExactField K>
Vec<K> operator*(const K& s, Vec<K> a) {
  for (K& x : a) x *= s;
  return a;
}

template <ExactField K>
K dot(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) fail(ErrorKind::dimension_mismatch, "dot product of different lengths");
  K acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

/// Dense row-major matrix over an exact field.
template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::dimension_mismatch, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<K> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const K> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<K> column(std::size_t j) const {
    Vec<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<Vec<K>> row_vectors() const {
    std::vector<Vec<K>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  void append_row(const Vec<K>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(ErrorKind::dimension_mismatch, "appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Matrix-vector product with a column vector.
  Vec<K> apply(const Vec<K>& x) const {
    if (x.size() != cols_) fail(ErrorKind::dimension_mismatch, "matrix-vector size mismatch");
    Vec<K> y(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      K acc(0);
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& a = (*this)(i, j);
        if (!a.is_zero() && !x[j].is_zero()) acc += a * x[j];
      }
      y[i] = acc;
    }
    return y;
  }

  /// Row vector times matrix.
  Vec<K> apply_left(const Vec<K>& x) const {
    if (x.size() != rows_) fail(ErrorKind::dimension_mismatch, "vector-matrix size mismatch");
    Vec<K> y(cols_, K(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& a = (*this)(i, j);
        if (!a.is_zero()) y[j] += x[i] * a;
      }
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::dimension_mismatch, "matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::dimension_mismatch, "matrix sum size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::dimension_mismatch, "matrix difference size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (K& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row-major entries, flattened.
  const std::vector<K>& entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <ExactField K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) fail(ErrorKind::dimension_mismatch, "vstack column mismatch");
  Matrix<K> m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

// ---------------------------------------------------------------------------
// Row reduction

template <ExactField K>
struct RrefResult {
  Matrix<K> reduced;                ///< same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
template <ExactField K>
RrefResult<K> rref(Matrix<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    const K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// Basis (as rows, in RREF) of the right nullspace {x : m x = 0}.
template <ExactField K>
Matrix<K> nullspace_basis(const Matrix<K>& m) {
  const auto rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  Matrix<K> basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(cols, K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    basis.append_row(v);
  }
  return basis;
}

template <ExactField K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (!m.square()) fail(ErrorKind::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

}  // namespace wbd
