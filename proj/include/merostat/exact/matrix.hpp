#pragma once

// Dense matrices over an exact field, with rank / nullspace / possibly
// singular solves by exact Gaussian elimination.

#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "merostat/exact/poly.hpp"
#include "merostat/exact/rational.hpp"

namespace merostat::exact {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_ * cols_));
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols_);
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!exact::is_zero(v)) return false;
    return true;
  }
  bool is_scalar() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (i != j && !exact::is_zero((*this)(i, j))) return false;
        if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
      }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (exact::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  Matrix column(int c) const { return block(0, c, rows_, 1); }
  /// [this | other]
  Matrix hcat(const Matrix& o) const {
    if (cols_ == 0) return o;
    if (o.cols_ == 0) return *this;
    assert(rows_ == o.rows_);
    Matrix m(rows_, cols_ + o.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, o);
    return m;
  }
  /// [this ; other]
  Matrix vcat(const Matrix& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    assert(cols_ == o.cols_);
    Matrix m(rows_ + o.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, o);
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? "; " : "") << "[";
      for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << exact::to_string((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<int> rref_in_place(Matrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const T inv = T(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref_in_place(m).size());
}

/// Basis of {v : m v = 0} as the columns of the result (cols() == 0 when trivial).
/// Basis vector j has a 1 in the j-th free column.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  Matrix<T> r = m;
  const auto pivots = rref_in_place(r);
  std::vector<int> free_cols;
  size_t p = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    free_cols.push_back(c);
  }
  Matrix<T> basis(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    const int f = free_cols[j];
    basis(f, static_cast<int>(j)) = T(1);
    for (size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], static_cast<int>(j)) = -r(static_cast<int>(i), f);
  }
  return basis;
}

/// Free (non-pivot) column indices of the echelon form of m.
template <class T>
std::vector<int> free_columns(const Matrix<T>& m) {
  Matrix<T> r = m;
  const auto pivots = rref_in_place(r);
  std::vector<int> out;
  size_t p = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

template <class T>
struct SingularSolve {
  bool feasible = false;
  Matrix<T> particular;  ///< one solution X of M X = rhs
  Matrix<T> nullspace;   ///< columns span ker M
};

/// Exact solve of M X = rhs that tolerates singular M.  Infeasible (a valid
/// outcome) iff some column of rhs is outside the column space of M.
template <class T>
SingularSolve<T> solve_possibly_singular(const Matrix<T>& M, const Matrix<T>& rhs) {
  assert(M.rows() == rhs.rows());
  Matrix<T> aug = M.hcat(rhs);
  if (M.cols() == 0) aug = rhs;
  const auto pivots = rref_in_place(aug);
  SingularSolve<T> out;
  out.nullspace = nullspace(M);
  for (int pv : pivots)
    if (pv >= M.cols()) return out;
  out.feasible = true;
  out.particular = Matrix<T>(M.cols(), rhs.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < rhs.cols(); ++j) out.particular(pivots[i], j) = aug(static_cast<int>(i), M.cols() + j);
  return out;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.square()) return std::nullopt;
  auto s = solve_possibly_singular(m, Matrix<T>::identity(m.rows()));
  if (!s.feasible || s.nullspace.cols() > 0) return std::nullopt;
  return s.particular;
}

template <class T>
T determinant(Matrix<T> m) {
  assert(m.square());
  T det(1);
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) return T(0);
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const T f = m(r, c) * inv;
      for (int k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Characteristic polynomial det(lambda I - A) by Berkowitz's division-free
/// algorithm; valid over any commutative ring (including polynomial entries).
template <class T>
Poly<T> charpoly(const Matrix<T>& a) {
  assert(a.square());
  const int n = a.rows();
  // Coefficient vector, highest power first: starts as [1, -a00].
  std::vector<T> vect{T(1), -a(0, 0)};
  if (n == 0) return Poly<T>(T(1));
  for (int r = 1; r < n; ++r) {
    // Toeplitz column for the leading (r+1)x(r+1) block.
    // R = a(r, 0..r-1), C = a(0..r-1, r), A = leading r x r block, a_rr.
    std::vector<T> col;
    col.reserve(static_cast<size_t>(r) + 2);
    col.push_back(T(1));
    col.push_back(-a(r, r));
    std::vector<T> x(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) x[static_cast<size_t>(i)] = a(i, r);  // C
    for (int k = 0; k < r; ++k) {
      T dot(0);
      for (int i = 0; i < r; ++i) dot += a(r, i) * x[static_cast<size_t>(i)];  // R A^k C
      col.push_back(-dot);
      std::vector<T> y(static_cast<size_t>(r), T(0));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) y[static_cast<size_t>(i)] += a(i, j) * x[static_cast<size_t>(j)];
      x = std::move(y);
    }
    // new_vect = Toeplitz(col) * vect, sizes (r+2) x (r+1).
    std::vector<T> nv(static_cast<size_t>(r) + 2, T(0));
    for (size_t i = 0; i < nv.size(); ++i)
      for (size_t j = 0; j <= i && j < vect.size(); ++j) nv[i] += col[i - j] * vect[j];
    vect = std::move(nv);
  }
  std::vector<T> coeffs(vect.rbegin(), vect.rend());
  return Poly<T>(std::move(coeffs));
}

using RationalMatrix = Matrix<Rational>;
using ExactMatrix = Matrix<GaussianRational>;

template <class T>
Matrix<GaussianRational> to_gaussian(const Matrix<T>& m) {
  Matrix<GaussianRational> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
  return out;
}

}  // namespace merostat::exact
