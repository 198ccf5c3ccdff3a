#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "llv/errors.hpp"
#include "llv/scalar.hpp"

namespace llv {

template <typename F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix diagonal(const Vec<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<F>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<F>& data() const { return a_; }

  Vec<F> row(std::size_t i) const { return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<F> col(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : a_)
      if (!x.is_zero()) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vec<F> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (!x.is_zero() && !v[k].is_zero()) out[i] += x * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  template <typename G, typename Fn>
  Matrix<G> map(Fn fn) const {
    Matrix<G> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = fn((*this)(i, j));
    return m;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

template <typename F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

template <typename F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <typename F>
F trace(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix");
  F t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

template <typename F>
Matrix<F> power(const Matrix<F>& a, int k) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  Matrix<F> r = Matrix<F>::identity(a.rows());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

template <typename F>
Vec<F> operator+(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <typename F>
Vec<F> operator-(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <typename F>
Vec<F> scale(const F& s, Vec<F> v) {
  for (auto& x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

template <typename F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <typename F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  F s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

template <typename F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
  Vec<F> v(n);
  v.at(i) = F(1);
  return v;
}

/// Bilinear form x^T B y.
template <typename F>
F bilinear(const Matrix<F>& b, const Vec<F>& x, const Vec<F>& y) {
  return dot(x, b * y);
}

/// In-place reduced row echelon form; returns pivot columns.
template <typename F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <typename F>
std::pair<Matrix<F>, std::vector<std::size_t>> rref(Matrix<F> m) {
  auto piv = rref_inplace(m);
  return {std::move(m), std::move(piv)};
}

template <typename F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> c = m;
  return rref_inplace(c).size();
}

/// Solves a·x = b; nullopt when inconsistent. Returns the solution with free variables zero.
template <typename F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  auto piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

/// Solves a·X = b column by column; nullopt when inconsistent.
template <typename F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  auto piv = rref_inplace(aug);
  for (auto p : piv)
    if (p >= a.cols()) return std::nullopt;
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, a.cols() + j);
  return x;
}

template <typename F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<F>::identity(n));
  auto piv = rref_inplace(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <typename F>
bool is_symmetric(const Matrix<F>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

template <typename F>
bool is_nilpotent(const Matrix<F>& a) {
  if (!a.is_square()) return false;
  return power(a, static_cast<int>(a.rows())).is_zero();
}

inline Matrix<Gaussian> to_gaussian(const Matrix<Rational>& m) {
  return m.template map<Gaussian>([](const Rational& x) { return Gaussian(x); });
}

inline Vec<Gaussian> to_gaussian(const Vec<Rational>& v) { return Vec<Gaussian>(v.begin(), v.end()); }

}  // namespace llv
