#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llv/matrix.hpp"
#include "llv/sparse_echelon.hpp"
#include "llv/subspace.hpp"

namespace llv {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
  std::size_t suppressed = 0;

  void fail(std::string what) {
    ok = false;
    if (issues.size() < 40) issues.push_back(std::move(what));
    else ++suppressed;
  }
  void merge(const ValidationReport& o) {
    for (const auto& s : o.issues) fail(s);
    suppressed += o.suppressed;
    ok = ok && o.ok;
  }
};

inline int graded_sign(int da, int db) { return (da % 2 != 0 && db % 2 != 0) ? -1 : 1; }

/// Finite-dimensional graded commutative algebra given by structure constants on a
/// homogeneous basis ordered by degree. Basis element 0 is the unit.
template <typename F>
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(int top_degree, std::vector<int> dims, std::vector<std::string> labels = {})
      : top_(top_degree), dims_(std::move(dims)), labels_(std::move(labels)) {
    if (top_ < 0 || static_cast<int>(dims_.size()) != top_ + 1)
      throw DimensionError("dims must list every degree 0..top");
    offsets_.assign(dims_.size() + 1, 0);
    for (std::size_t d = 0; d < dims_.size(); ++d) {
      if (dims_[d] < 0) throw DimensionError("negative graded dimension");
      offsets_[d + 1] = offsets_[d] + dims_[d];
    }
    for (int d = 0; d <= top_; ++d)
      for (int k = 0; k < dims_[d]; ++k) degree_.push_back(d);
    if (labels_.empty())
      for (std::size_t i = 0; i < size(); ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != size()) throw DimensionError("label count differs from basis size");
    table_.assign(size() * size(), {});
    integration_.assign(dims_[top_], F());
  }

  int top_degree() const { return top_; }
  int middle_degree() const { return top_ / 2; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int d) const { return d < 0 || d > top_ ? 0 : dims_[d]; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t offset(int d) const { return offsets_.at(d); }
  int degree_of(std::size_t i) const { return degree_.at(i); }
  const std::vector<int>& degrees() const { return degree_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const SparseVec<F>& product(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  void set_product(std::size_t i, std::size_t j, SparseVec<F> v) { table_.at(i * size() + j) = std::move(v); }
  void add_product_term(std::size_t i, std::size_t j, std::size_t k, const F& c) {
    auto& t = table_.at(i * size() + j);
    for (auto& [idx, x] : t)
      if (idx == k) {
        x += c;
        return;
      }
    t.emplace_back(static_cast<std::uint32_t>(k), c);
  }

  const Vec<F>& integration() const { return integration_; }
  void set_integration(Vec<F> w) {
    if (static_cast<int>(w.size()) != dims_[top_]) throw DimensionError("integration length mismatch");
    integration_ = std::move(w);
  }

  Vec<F> zero() const { return Vec<F>(size()); }
  Vec<F> basis_vector(std::size_t i) const { return unit_vec<F>(size(), i); }
  Vec<F> one() const { return basis_vector(0); }

  /// Embeds coordinates on the degree-d piece into the full ring.
  Vec<F> embed(int d, const Vec<F>& piece) const {
    if (static_cast<int>(piece.size()) != dim(d)) throw DimensionError("piece length mismatch");
    Vec<F> v = zero();
    for (int k = 0; k < dim(d); ++k) v[offset(d) + k] = piece[k];
    return v;
  }

  Vec<F> component(const Vec<F>& v, int d) const {
    return Vec<F>(v.begin() + offset(d), v.begin() + offset(d) + dim(d));
  }

  bool is_homogeneous(const Vec<F>& v, int d) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero() && degree_[i] != d) return false;
    return true;
  }

  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
    check(a);
    check(b);
    Vec<F> out = zero();
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (b[j].is_zero()) continue;
        const auto& t = product(i, j);
        if (t.empty()) continue;
        F c = a[i] * b[j];
        for (const auto& [k, x] : t) out[k] += c * x;
      }
    }
    return out;
  }

  Vec<F> power(const Vec<F>& a, int k) const {
    Vec<F> r = one();
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
  }

  F integrate(const Vec<F>& v) const {
    check(v);
    F s;
    for (int k = 0; k < dims_[top_]; ++k)
      if (!v[offset(top_) + k].is_zero()) s += v[offset(top_) + k] * integration_[k];
    return s;
  }

  /// Matrix of x -> a·x on the whole ring.
  Matrix<F> left_mult(const Vec<F>& a) const {
    check(a);
    Matrix<F> m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < size(); ++j)
        for (const auto& [k, x] : product(i, j)) m(k, j) += a[i] * x;
    }
    return m;
  }

  /// Gram matrix of (x, y) -> integrate(x·y) between degree d and top - d.
  Matrix<F> duality_pairing(int d) const {
    int e = top_ - d;
    Matrix<F> p(dim(d), dim(e));
    for (int a = 0; a < dim(d); ++a)
      for (int b = 0; b < dim(e); ++b) {
        F s;
        for (const auto& [k, x] : product(offset(d) + a, offset(e) + b))
          if (degree_[k] == top_) s += x * integration_[k - offset(top_)];
        p(a, b) = s;
      }
    return p;
  }

  template <typename G>
  GradedAlgebra<G> cast() const {
    GradedAlgebra<G> r(top_, dims_, labels_);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        SparseVec<G> t;
        for (const auto& [k, x] : product(i, j)) t.emplace_back(k, G(x));
        r.set_product(i, j, std::move(t));
      }
    Vec<G> w;
    for (const auto& x : integration_) w.push_back(G(x));
    r.set_integration(std::move(w));
    return r;
  }

  GradedAlgebra with_integration_scaled(const F& c) const {
    GradedAlgebra r = *this;
    for (auto& x : r.integration_) x *= c;
    return r;
  }

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (a.top_ != b.top_ || a.dims_ != b.dims_ || a.integration_ != b.integration_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (to_dense(a.product(i, j), a.size()) != to_dense(b.product(i, j), b.size())) return false;
    return true;
  }

 private:
  void check(const Vec<F>& v) const {
    if (v.size() != size()) throw DimensionError("element length differs from ring dimension");
  }

  int top_ = 0;
  std::vector<int> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<int> degree_;
  std::vector<std::string> labels_;
  std::vector<SparseVec<F>> table_;
  Vec<F> integration_;
};

/// Graded algebra with a Hodge (p,q) label per basis element, a class sigma of type
/// (2,0), its conjugate of type (0,2), and the complex conjugation as a matrix acting
/// on coefficient-conjugated vectors.
template <typename F>
struct BigradedAlgebra {
  GradedAlgebra<F> ring;
  std::vector<std::pair<int, int>> pq;
  Vec<F> sigma;
  Vec<F> sigma_bar;
  int n = 0;  // top degree is 4n
  std::optional<Matrix<F>> conjugation;

  std::vector<int> p_weights() const {
    std::vector<int> w;
    for (const auto& [p, q] : pq) w.push_back(p - n);
    return w;
  }
  std::vector<int> q_weights() const {
    std::vector<int> w;
    for (const auto& [p, q] : pq) w.push_back(q - n);
    return w;
  }

  template <typename G>
  BigradedAlgebra<G> cast() const {
    BigradedAlgebra<G> b;
    b.ring = ring.template cast<G>();
    b.pq = pq;
    b.sigma.assign(sigma.begin(), sigma.end());
    b.sigma_bar.assign(sigma_bar.begin(), sigma_bar.end());
    b.n = n;
    if (conjugation) b.conjugation = conjugation->template map<G>([](const F& x) { return G(x); });
    return b;
  }
};

/// Checks the four ring axioms: unit and one-dimensional ends, graded commutativity,
/// associativity and Poincaré duality.
template <typename F>
ValidationReport validate(const GradedAlgebra<F>& r);

/// Bigrading checks: p + q = degree, multiplicativity, types of sigma and its conjugate.
template <typename F>
ValidationReport validate_bigrading(const BigradedAlgebra<F>& b);

/// Associativity defects as (i, j, k) triples; OpenMP-parallel over i.
template <typename F>
std::vector<std::array<std::size_t, 3>> associativity_defects(const GradedAlgebra<F>& r, std::size_t limit);

/// Serial reference for associativity_defects.
template <typename F>
std::vector<std::array<std::size_t, 3>> associativity_defects_serial(const GradedAlgebra<F>& r,
                                                                      std::size_t limit);

}  // namespace llv
