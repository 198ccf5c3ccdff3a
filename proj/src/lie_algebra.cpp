#include "llv/lie_algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "llv/spectrum.hpp"

namespace llv {

namespace {

// echelon rows in pivot order
template <typename F>
std::vector<std::size_t> row_order(const SparseEchelon<F>& e) {
  std::vector<std::size_t> idx(e.dim());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return e.pivot(a) < e.pivot(b); });
  return idx;
}

// coordinates of a vector known to lie in the span: its values at the pivots
template <typename F>
Vec<F> span_coordinates(const SparseEchelon<F>& e, const std::vector<std::size_t>& order, const Vec<F>& v) {
  Vec<F> c(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) c[k] = v[e.pivot(order[k])];
  return c;
}

template <typename F>
bool add_reduced(MatrixLieAlgebra<F>& g, Vec<F> v, std::vector<Vec<F>>& frontier) {
  g.echelon().reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  frontier.push_back(v);
  g.echelon().insert_reduced(std::move(v), p);
  return true;
}

template <typename F>
MatrixLieAlgebra<F> closure(const std::vector<Matrix<F>>& gens, bool parallel) {
  if (gens.empty()) return MatrixLieAlgebra<F>(0);
  const std::size_t n = gens.front().rows();
  for (const auto& m : gens)
    if (m.rows() != n || m.cols() != n) throw DimensionError("lie_closure: generators of different shapes");
  MatrixLieAlgebra<F> g(n);
  std::vector<Vec<F>> frontier;
  for (const auto& m : gens) add_reduced(g, flatten(m), frontier);
  const std::size_t ng = gens.size();
  while (!frontier.empty()) {
    std::vector<Vec<F>> cur;
    std::swap(cur, frontier);
    const long tasks = static_cast<long>(cur.size() * ng);
    std::vector<Vec<F>> out(tasks);
    auto work = [&](long t) {
      Matrix<F> x = unflatten(cur[t / ng], n);
      Vec<F> b = flatten(commutator(gens[t % ng], x));
      g.echelon().reduce(b);
      if (!is_zero_vec(b)) out[t] = std::move(b);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long t = 0; t < tasks; ++t) work(t);
    } else {
      for (long t = 0; t < tasks; ++t) work(t);
    }
    for (auto& v : out)
      if (!v.empty()) add_reduced(g, std::move(v), frontier);
  }
  return g;
}

std::size_t choose2(int k) { return k < 2 ? 0 : static_cast<std::size_t>(k) * (k - 1) / 2; }

}  // namespace

template <typename F>
std::vector<Matrix<F>> MatrixLieAlgebra<F>::basis() const {
  std::vector<Matrix<F>> out;
  for (std::size_t r : row_order(ech_)) out.push_back(unflatten(to_dense(ech_.row(r), n_ * n_), n_));
  return out;
}

template <typename F>
bool MatrixLieAlgebra<F>::contains(const Matrix<F>& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionError("matrix size differs from the Lie algebra");
  return ech_.contains(flatten(m));
}

template <typename F>
std::optional<Vec<F>> MatrixLieAlgebra<F>::coordinates(const Matrix<F>& m) const {
  if (!contains(m)) return std::nullopt;
  return span_coordinates(ech_, row_order(ech_), flatten(m));
}

template <typename F>
Matrix<F> unflatten(const Vec<F>& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionError("unflatten: length is not n^2");
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

template <typename F>
MatrixLieAlgebra<F> lie_closure(const std::vector<Matrix<F>>& generators) {
  return closure(generators, true);
}

template <typename F>
MatrixLieAlgebra<F> lie_closure_serial(const std::vector<Matrix<F>>& generators) {
  return closure(generators, false);
}

template <typename F>
bool is_bracket_closed(const MatrixLieAlgebra<F>& g) {
  auto b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!g.contains(commutator(b[i], b[j]))) return false;
  return true;
}

template <typename F>
Matrix<F> ad_matrix(const MatrixLieAlgebra<F>& g, const std::vector<Matrix<F>>& basis, const Matrix<F>& x) {
  const auto order = row_order(g.echelon());
  Matrix<F> ad(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec<F> v = flatten(commutator(x, basis[j]));
    Vec<F> c = span_coordinates(g.echelon(), order, v);
    for (std::size_t i = 0; i < basis.size(); ++i) ad(i, j) = c[i];
  }
  return ad;
}

template <typename F>
AdGrading<F> ad_grading(const MatrixLieAlgebra<F>& g, const Matrix<F>& H) {
  if (!g.contains(H)) throw ValidationError("ad_grading: H is not in the algebra");
  auto basis = g.basis();
  auto order = row_order(g.echelon());
  Matrix<F> ad(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec<F> v = flatten(commutator(H, basis[j]));
    if (!g.echelon().contains(v)) throw MathError("decomposition violated: ad(H) leaves the algebra");
    Vec<F> c = span_coordinates(g.echelon(), order, v);
    for (std::size_t i = 0; i < basis.size(); ++i) ad(i, j) = c[i];
  }
  std::map<long, Subspace<F>> es;
  try {
    es = integer_eigenspaces(ad, {-2, 0, 2});
  } catch (const MathError&) {
    throw MathError("decomposition violated: ad(H) has eigenvalues outside {-2, 0, 2}");
  }
  auto to_mats = [&](const Subspace<F>& s) {
    std::vector<Matrix<F>> out;
    for (const auto& c : s.vectors()) {
      Matrix<F> m(g.ambient(), g.ambient());
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) m += basis[k] * c[k];
      out.push_back(std::move(m));
    }
    return out;
  };
  return {to_mats(es.at(2)), to_mats(es.at(0)), to_mats(es.at(-2))};
}

template <typename F>
Matrix<F> killing_form(const MatrixLieAlgebra<F>& g) {
  auto basis = g.basis();
  const long d = static_cast<long>(basis.size());
  std::vector<Matrix<F>> ad(d);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < d; ++i) ad[i] = ad_matrix(g, basis, basis[i]);
  Matrix<F> k(d, d);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      F s;
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
          if (!ad[i](a, b).is_zero() && !ad[j](b, a).is_zero()) s += ad[i](a, b) * ad[j](b, a);
      k(i, j) = s;
      k(j, i) = s;
    }
  return k;
}

template <typename F>
Matrix<F> trace_form(const MatrixLieAlgebra<F>& g) {
  auto basis = g.basis();
  const long d = static_cast<long>(basis.size());
  const std::size_t n = g.ambient();
  Matrix<F> k(d, d);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      F s;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!basis[i](a, b).is_zero() && !basis[j](b, a).is_zero()) s += basis[i](a, b) * basis[j](b, a);
      k(i, j) = s;
      k(j, i) = s;
    }
  return k;
}

SoReport so_identify(const MatrixLieAlgebra<Rational>& g, int b2, Signature h2, std::size_t killing_limit) {
  SoReport r;
  r.dim = g.dim();
  r.expected_dim = static_cast<std::size_t>(b2 + 2) * (b2 + 1) / 2;
  const int p = h2.pos + 1, q = h2.neg + 1;
  r.expected_compact = static_cast<int>(choose2(p) + choose2(q));
  r.expected_noncompact = p * q;
  r.exact_killing = r.dim <= killing_limit;
  Matrix<Rational> k = r.exact_killing ? killing_form(g) : trace_form(g);
  bool ratio_ok = true;
  if (!r.exact_killing) {
    // exact Killing values on pairs from an evenly spread sample of basis elements
    auto basis = g.basis();
    std::vector<std::size_t> sample;
    for (std::size_t i = 0; i < basis.size(); i += std::max<std::size_t>(1, basis.size() / 6)) sample.push_back(i);
    std::vector<Matrix<Rational>> ad;
    for (std::size_t i : sample) ad.push_back(ad_matrix(g, basis, basis[i]));
    bool have = false;
    for (std::size_t a = 0; a < sample.size(); ++a)
      for (std::size_t b = a; b < sample.size(); ++b) {
        Rational kv = trace(ad[a] * ad[b]), tv = k(sample[a], sample[b]);
        if (tv.is_zero()) {
          ratio_ok = ratio_ok && kv.is_zero();
        } else if (!have) {
          r.ratio = kv / tv;
          have = true;
        } else {
          ratio_ok = ratio_ok && kv == r.ratio * tv;
        }
        ++r.ratio_checks;
      }
    ratio_ok = ratio_ok && have && r.ratio.sign() > 0;
  }
  Signature s = symmetric_signature(k);
  r.semisimple_part_dim = static_cast<std::size_t>(s.pos + s.neg);
  if (s.null != 0)
    throw MathError("not semisimple: invariant form has a " + std::to_string(s.null) + "-dimensional radical");
  // the Killing form is negative on compact directions
  r.compact = s.neg;
  r.noncompact = s.pos;
  r.pass = ratio_ok && r.dim == r.expected_dim && r.compact == r.expected_compact && r.noncompact == r.expected_noncompact;
  return r;
}

SoReport so_identify(const MatrixLieAlgebra<Rational>& g, int b2, std::size_t killing_limit) {
  return so_identify(g, b2, Signature{3, b2 - 3, 0}, killing_limit);
}

#define LLV_INSTANTIATE(F)                                                                                    \
  template class MatrixLieAlgebra<F>;                                                                         \
  template Matrix<F> unflatten<F>(const Vec<F>&, std::size_t);                                                \
  template MatrixLieAlgebra<F> lie_closure<F>(const std::vector<Matrix<F>>&);                                 \
  template MatrixLieAlgebra<F> lie_closure_serial<F>(const std::vector<Matrix<F>>&);                          \
  template bool is_bracket_closed<F>(const MatrixLieAlgebra<F>&);                                             \
  template Matrix<F> ad_matrix<F>(const MatrixLieAlgebra<F>&, const std::vector<Matrix<F>>&, const Matrix<F>&); \
  template AdGrading<F> ad_grading<F>(const MatrixLieAlgebra<F>&, const Matrix<F>&);                          \
  template Matrix<F> killing_form<F>(const MatrixLieAlgebra<F>&);                                             \
  template Matrix<F> trace_form<F>(const MatrixLieAlgebra<F>&);

LLV_INSTANTIATE(Rational)
LLV_INSTANTIATE(Gaussian)

}  // namespace llv
