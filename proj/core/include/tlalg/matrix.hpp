#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tlalg/error.hpp"
#include "tlalg/scalar.hpp"

namespace tlalg {

template <Field F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field. The scalar domain is part of
/// the type, so mixing domains is rejected at compile time.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Columns are the given vectors; `rows` is needed when `cols` is empty.
  static Matrix from_columns(const std::vector<Vector<F>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector<F> row(std::size_t r) const {
    return Vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!tlalg::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (tlalg::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vector<F> out(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!tlalg::is_zero(v[k])) out[i] += a(i, k) * v[k];
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? "; " : "");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

template <Field F>
Vector<F> kronecker(const Vector<F>& a, const Vector<F>& b) {
  Vector<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

template <Field F>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivots are chosen
/// in the leftmost remaining column, first nonzero row, so output is fully
/// deterministic.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of {v : m v = 0}, one vector per free column in ascending order.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Indices (into `vectors`) of the first maximal linearly independent subset.
template <Field F>
std::vector<std::size_t> independent_subset(const std::vector<Vector<F>>& vectors, std::size_t dim) {
  auto r = rref(Matrix<F>::from_columns(vectors, dim));
  return r.pivot_cols;
}

/// Representatives of span(z) / span(b). Throws Error{NotASubspace} when
/// span(b) is not contained in span(z). Vectors are taken from `z` in order,
/// keeping those independent of span(b) and of earlier picks.
template <Field F>
std::vector<Vector<F>> quotient_basis(const std::vector<Vector<F>>& z, const std::vector<Vector<F>>& b) {
  if (z.empty() && b.empty()) return {};
  const std::size_t dim = z.empty() ? b.front().size() : z.front().size();
  std::vector<Vector<F>> zb = z;
  zb.insert(zb.end(), b.begin(), b.end());
  if (rank(Matrix<F>::from_columns(zb, dim)) != rank(Matrix<F>::from_columns(z, dim))) {
    throw Error(ErrorCode::NotASubspace, "quotient_basis: span(b) is not contained in span(z)");
  }
  std::vector<Vector<F>> bz = b;
  bz.insert(bz.end(), z.begin(), z.end());
  std::vector<Vector<F>> reps;
  for (auto c : independent_subset(bz, dim)) {
    if (c >= b.size()) reps.push_back(z[c - b.size()]);
  }
  return reps;
}

/// Some solution x of m x = rhs (free variables set to zero), or nullopt
/// when the system is inconsistent.
template <Field F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector<F> x(m.cols(), F(0));
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_cols[i]] = red.reduced(i, m.cols());
  return x;
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F(1);
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace tlalg
