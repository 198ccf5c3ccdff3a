#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "llv/matrix.hpp"

namespace llv {

/// Subspace of F^n stored as a reduced row echelon basis, so equal subspaces
/// have identical representations.
template <typename F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix<F>::identity(n)); }

  /// Row space of m.
  static Subspace span(const Matrix<F>& m) {
    Subspace s(m.cols());
    Matrix<F> r = m;
    auto piv = rref_inplace(r);
    s.basis_ = r.block(0, 0, piv.size(), m.cols());
    s.pivots_ = std::move(piv);
    return s;
  }

  static Subspace span(const std::vector<Vec<F>>& vecs, std::size_t n) {
    return span(Matrix<F>::from_rows(vecs, n));
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<F> vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec<F>> vectors() const {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Coefficients of v in the echelon basis, or nullopt if v is not in the span.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (v.size() != n_) throw DimensionError("coordinates: ambient mismatch");
    Vec<F> c(dim());
    Vec<F> r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = r[pivots_[i]];
      if (c[i].is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < n_; ++j)
        if (!basis_(i, j).is_zero()) r[j] -= c[i] * basis_(i, j);
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return c;
  }

  bool contains(const Vec<F>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& o) const {
    check(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }

  /// Annihilator {w : <w, v> = 0 for all v} under the coordinate pairing.
  Subspace annihilator() const {
    if (dim() == 0) return full(n_);
    return kernel_of(basis_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check(b);
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    Matrix<F> m(a.dim() + b.dim(), a.n_);
    m.set_block(0, 0, a.basis_);
    m.set_block(a.dim(), 0, b.basis_);
    return span(m);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check(b);
    if (a.dim() == 0 || b.dim() == 0) return zero(a.n_);
    if (a.dim() == a.n_) return b;
    if (b.dim() == b.n_) return a;
    return (a.annihilator() + b.annihilator()).annihilator();
  }

  /// Image of the subspace under m (vectors as columns: v -> m v).
  Subspace image_under(const Matrix<F>& m) const {
    if (m.cols() != n_) throw DimensionError("image_under: shape mismatch");
    std::vector<Vec<F>> imgs;
    for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(m * vector(i));
    if (imgs.empty()) return zero(m.rows());
    return span(imgs, m.rows());
  }

  static Subspace kernel_of(const Matrix<F>& m) {
    Matrix<F> r = m;
    auto piv = rref_inplace(r);
    std::size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec<F>> vecs;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_piv[f]) continue;
      Vec<F> v(n);
      v[f] = F(1);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
      vecs.push_back(std::move(v));
    }
    if (vecs.empty()) return zero(n);
    return span(vecs, n);
  }

 private:
  void check(const Subspace& o) const {
    if (n_ != o.n_) throw DimensionError("subspaces live in different ambient spaces");
  }

  std::size_t n_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <typename F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>::kernel_of(m);
}

/// Column space of m.
template <typename F>
Subspace<F> column_space(const Matrix<F>& m) {
  return Subspace<F>::span(m.transpose());
}

}  // namespace llv
