#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "llv/matrix.hpp"

namespace llv {

template <typename F>
using SparseVec = std::vector<std::pair<std::uint32_t, F>>;

template <typename F>
SparseVec<F> to_sparse(const Vec<F>& v) {
  SparseVec<F> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

template <typename F>
Vec<F> to_dense(const SparseVec<F>& s, std::size_t n) {
  Vec<F> v(n);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

/// Incrementally maintained reduced echelon basis with sparse rows. Every row has
/// a leading 1 at its pivot and zeros at all other pivots, so reduction is a single
/// pass over the pivots present in the input.
template <typename F>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t n) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const SparseVec<F>& row(std::size_t i) const { return rows_[i]; }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }

  /// Subtracts the span component in place; what remains is zero iff v was in the span.
  void reduce(Vec<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (const auto& [j, x] : rows_[r]) v[j] -= c * x;
    }
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  /// Coordinates with respect to the rows (value at each row's pivot), or nullopt.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    Vec<F> c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    Vec<F> w = v;
    reduce(w);
    if (!is_zero_vec(w)) return std::nullopt;
    return c;
  }

  /// Adds v to the span; returns false when it was already there.
  bool insert(Vec<F> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    insert_reduced(std::move(v), p);
    return true;
  }

  /// Inserts a vector already reduced against the current rows, with pivot p.
  void insert_reduced(Vec<F> v, std::size_t p) {
    F inv = F(1) / v[p];
    SparseVec<F> s;
    for (std::size_t j = p; j < n_; ++j)
      if (!v[j].is_zero()) s.emplace_back(static_cast<std::uint32_t>(j), v[j] * inv);
    // clear column p from the existing rows
    for (auto& row : rows_) {
      F c;
      for (const auto& [j, x] : row)
        if (j == p) {
          c = x;
          break;
        }
      if (c.is_zero()) continue;
      Vec<F> d = to_dense(row, n_);
      for (const auto& [j, x] : s) d[j] -= c * x;
      row = to_sparse(d);
    }
    rows_.push_back(std::move(s));
    pivots_.push_back(p);
  }

  Matrix<F> to_matrix() const {
    Matrix<F> m(rows_.size(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [j, x] : rows_[r]) m(r, j) = x;
    return m;
  }

 private:
  std::size_t n_;
  std::vector<SparseVec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace llv
