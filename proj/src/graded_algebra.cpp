#include "llv/graded_algebra.hpp"

#include <omp.h>

#include <sstream>

namespace llv {

namespace {

template <typename F>
Vec<F> product_then(const GradedAlgebra<F>& r, const SparseVec<F>& left, std::size_t k) {
  Vec<F> out = r.zero();
  for (const auto& [t, c] : left)
    for (const auto& [u, x] : r.product(t, k)) out[u] += c * x;
  return out;
}

template <typename F>
Vec<F> then_product(const GradedAlgebra<F>& r, std::size_t i, const SparseVec<F>& right) {
  Vec<F> out = r.zero();
  for (const auto& [t, c] : right)
    for (const auto& [u, x] : r.product(i, t)) out[u] += c * x;
  return out;
}

template <typename F>
bool associative_at(const GradedAlgebra<F>& r, std::size_t i, std::size_t j, std::size_t k) {
  return product_then(r, r.product(i, j), k) == then_product(r, i, r.product(j, k));
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

template <typename F>
std::vector<std::array<std::size_t, 3>> associativity_defects_serial(const GradedAlgebra<F>& r,
                                                                      std::size_t limit) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (r.degree_of(i) + r.degree_of(j) > r.top_degree()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (r.degree_of(i) + r.degree_of(j) + r.degree_of(k) > r.top_degree()) continue;
        if (!associative_at(r, i, j, k)) {
          out.push_back({i, j, k});
          if (out.size() >= limit) return out;
        }
      }
    }
  return out;
}

template <typename F>
std::vector<std::array<std::size_t, 3>> associativity_defects(const GradedAlgebra<F>& r, std::size_t limit) {
  const long n = static_cast<long>(r.size());
  std::vector<std::vector<std::array<std::size_t, 3>>> per_i(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& mine = per_i[i];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.degree_of(i) + r.degree_of(j) > r.top_degree()) continue;
      for (std::size_t k = 0; k < r.size() && mine.size() < limit; ++k) {
        if (r.degree_of(i) + r.degree_of(j) + r.degree_of(k) > r.top_degree()) continue;
        if (!associative_at(r, static_cast<std::size_t>(i), j, k)) mine.push_back({std::size_t(i), j, k});
      }
    }
  }
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& v : per_i)
    for (const auto& t : v) {
      if (out.size() >= limit) return out;
      out.push_back(t);
    }
  return out;
}

template <typename F>
ValidationReport validate(const GradedAlgebra<F>& r) {
  ValidationReport rep;
  const std::size_t n = r.size();
  const int top = r.top_degree();
  if (r.dim(0) != 1) rep.fail("degree 0 is not one-dimensional");
  if (r.dim(top) != 1) rep.fail("top degree is not one-dimensional");
  if (!rep.ok) return rep;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int d = r.degree_of(i) + r.degree_of(j);
      for (const auto& [k, x] : r.product(i, j))
        if (r.degree_of(k) != d) {
          rep.fail("product of " + r.label(i) + " and " + r.label(j) + " leaves degree " + std::to_string(d));
          break;
        }
    }

  for (std::size_t j = 0; j < n; ++j) {
    if (to_dense(r.product(0, j), n) != r.basis_vector(j) || to_dense(r.product(j, 0), n) != r.basis_vector(j))
      rep.fail("unit does not act as identity on " + r.label(j));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<F> ab = to_dense(r.product(i, j), n);
      Vec<F> ba = to_dense(r.product(j, i), n);
      if (graded_sign(r.degree_of(i), r.degree_of(j)) < 0) ba = scale(F(-1), ba);
      if (ab != ba) rep.fail("graded-commutativity failure at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  for (const auto& t : associativity_defects(r, 40)) rep.fail("associativity failure at " + triple(t[0], t[1], t[2]));

  for (int d = 0; d <= top; ++d) {
    if (r.dim(d) != r.dim(top - d)) {
      rep.fail("duality degenerate: dims of degree " + std::to_string(d) + " and " + std::to_string(top - d) +
               " differ");
      continue;
    }
    if (r.dim(d) == 0) continue;
    if (rank(r.duality_pairing(d)) != static_cast<std::size_t>(r.dim(d))) {
      rep.fail("duality degenerate in degree " + std::to_string(d));
    }
  }
  return rep;
}

template <typename F>
ValidationReport validate_bigrading(const BigradedAlgebra<F>& b) {
  ValidationReport rep;
  const auto& r = b.ring;
  const std::size_t n = r.size();
  if (b.pq.size() != n) {
    rep.fail("bigrading has " + std::to_string(b.pq.size()) + " labels for " + std::to_string(n) + " basis elements");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (b.pq[i].first + b.pq[i].second != r.degree_of(i) || b.pq[i].first < 0 || b.pq[i].second < 0)
      rep.fail("bidegree of " + r.label(i) + " does not add up to its degree");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, x] : r.product(i, j)) {
        if (b.pq[k].first != b.pq[i].first + b.pq[j].first || b.pq[k].second != b.pq[i].second + b.pq[j].second) {
          rep.fail("bigrading not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
  auto has_type = [&](const Vec<F>& v, int p, int q) {
    if (v.size() != n || is_zero_vec(v)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero() && (b.pq[i].first != p || b.pq[i].second != q)) return false;
    return true;
  };
  if (!has_type(b.sigma, 2, 0)) rep.fail("sigma is not of type (2,0)");
  if (!has_type(b.sigma_bar, 0, 2)) rep.fail("sigma-bar is not of type (0,2)");
  if (r.top_degree() != 4 * b.n) rep.fail("top degree is not 4n");
  return rep;
}

#define LLV_INSTANTIATE(F)                                                                                      \
  template ValidationReport validate<F>(const GradedAlgebra<F>&);                                              \
  template ValidationReport validate_bigrading<F>(const BigradedAlgebra<F>&);                                  \
  template std::vector<std::array<std::size_t, 3>> associativity_defects<F>(const GradedAlgebra<F>&, std::size_t); \
  template std::vector<std::array<std::size_t, 3>> associativity_defects_serial<F>(const GradedAlgebra<F>&,        \
                                                                                   std::size_t);

LLV_INSTANTIATE(Rational)
LLV_INSTANTIATE(Gaussian)

}  // namespace llv
