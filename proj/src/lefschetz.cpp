#include "llv/lefschetz.hpp"

#include <algorithm>
#include <map>

namespace llv {

namespace {

std::map<int, std::vector<std::size_t>> weight_spaces(const std::vector<int>& w) {
  std::map<int, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) out[w[i]].push_back(i);
  return out;
}

template <typename F>
Matrix<F> restrict(const Matrix<F>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<F> b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = m(rows[i], cols[j]);
  return b;
}

template <typename F>
bool bijective(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

std::vector<std::size_t> indices_where(const std::vector<std::pair<int, int>>& pq, int p, int q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pq.size(); ++i)
    if (pq[i].first == p && pq[i].second == q) out.push_back(i);
  return out;
}

template <typename F>
Matrix<F> lambda_from_strings(const Matrix<F>& L, const std::vector<int>& weights) {
  const std::size_t n = L.rows();
  auto spaces = weight_spaces(weights);
  int wmax = 0;
  for (const auto& [w, idx] : spaces) wmax = std::max(wmax, std::abs(w));
  std::vector<Matrix<F>> pw{Matrix<F>::identity(n)};
  for (int j = 1; j <= 2 * wmax + 1; ++j) pw.push_back(L * pw.back());

  // string vectors and their Lam-images, grouped by the weight they live in
  std::map<int, std::vector<Vec<F>>> strings, images;
  for (const auto& [u, idx] : spaces) {
    if (u > 0) continue;
    const int m = -u;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (const auto& c : kernel(restrict(pw[m + 1], all, idx)).vectors()) {
      Vec<F> v(n);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = c[t];
      Vec<F> prev;
      for (int j = 0; j <= m; ++j) {
        Vec<F> cur = j == 0 ? v : L * prev;
        strings[u + 2 * j].push_back(cur);
        images[u + 2 * j].push_back(j == 0 ? Vec<F>(n) : scale(F(static_cast<long long>(j) * (m - j + 1)), prev));
        prev = std::move(cur);
      }
    }
  }

  Matrix<F> lam(n, n);
  for (const auto& [w, idx] : spaces) {
    const auto& s = strings[w];
    if (s.size() != idx.size()) throw MathError("not an HL class: Lefschetz strings do not fill weight " +
                                                std::to_string(w));
    Matrix<F> b(idx.size(), idx.size());
    for (std::size_t c = 0; c < s.size(); ++c)
      for (std::size_t t = 0; t < idx.size(); ++t) b(t, c) = s[c][idx[t]];
    auto inv = inverse(b);
    if (!inv) throw MathError("not an HL class: Lefschetz strings are dependent in weight " + std::to_string(w));
    Matrix<F> im = Matrix<F>::from_columns(images[w], n);
    Matrix<F> block = im * *inv;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < idx.size(); ++t) lam(i, idx[t]) = block(i, t);
  }
  return lam;
}

template <typename F>
long integer_value(const F& x, long bound) {
  for (long c = -bound; c <= bound; ++c)
    if (F(static_cast<long long>(c)) == x) return c;
  throw ValidationError("weight " + x.to_string() + " is not a small integer");
}

template <typename F>
std::size_t lambda_unknowns(const std::vector<int>& weights) {
  auto spaces = weight_spaces(weights);
  std::size_t k = 0;
  for (const auto& [w, idx] : spaces) {
    auto it = spaces.find(w - 2);
    if (it != spaces.end()) k += idx.size() * it->second.size();
  }
  return k;
}

}  // namespace

template <typename F>
Matrix<F> cup_operator(const GradedAlgebra<F>& r, const Vec<F>& a) {
  if (!r.is_homogeneous(a, 2)) throw DimensionError("cup_operator needs a homogeneous degree-2 class");
  return r.left_mult(a);
}

template <typename F>
std::vector<int> degree_weights(const GradedAlgebra<F>& r) {
  std::vector<int> w;
  for (int d : r.degrees()) w.push_back(d - r.middle_degree());
  return w;
}

template <typename F>
Matrix<F> weight_operator(const std::vector<int>& weights) {
  Vec<F> d;
  for (int w : weights) d.push_back(F(static_cast<long long>(w)));
  return Matrix<F>::diagonal(d);
}

template <typename F>
bool hl_test(const GradedAlgebra<F>& r, const Vec<F>& a) {
  const Matrix<F> L = cup_operator(r, a);
  const int m = r.middle_degree();
  Matrix<F> p = Matrix<F>::identity(r.size());
  for (int j = 1; j <= m; ++j) {
    p = L * p;
    int lo = m - j, hi = m + j;
    if (r.dim(lo) != r.dim(hi)) return false;
    if (r.dim(lo) == 0) continue;
    if (!bijective(p.block(r.offset(hi), r.offset(lo), r.dim(hi), r.dim(lo)))) return false;
  }
  return true;
}

template <typename F>
std::optional<Matrix<F>> solve_lambda(const Matrix<F>& L, const std::vector<int>& weights) {
  const std::size_t n = L.rows();
  if (!L.is_square() || weights.size() != n) throw DimensionError("solve_lambda: shape mismatch");
  // unknowns Lam(a, b) with weight(a) = weight(b) - 2
  std::vector<std::pair<std::size_t, std::size_t>> unk;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> col;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (weights[a] == weights[b] - 2) {
        col[{a, b}] = unk.size();
        unk.push_back({a, b});
      }
  // equations ([L, Lam] - H)(i, j) = 0 for weight(i) = weight(j)
  std::vector<std::pair<std::size_t, std::size_t>> eq;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (weights[i] == weights[j]) eq.push_back({i, j});
  Matrix<F> sys(eq.size(), unk.size());
  Vec<F> rhs(eq.size());
  for (std::size_t e = 0; e < eq.size(); ++e) {
    auto [i, j] = eq[e];
    // (L Lam)(i, j) = sum_a L(i, a) Lam(a, j)
    for (std::size_t a = 0; a < n; ++a) {
      if (L(i, a).is_zero()) continue;
      auto it = col.find({a, j});
      if (it != col.end()) sys(e, it->second) += L(i, a);
    }
    // (Lam L)(i, j) = sum_b Lam(i, b) L(b, j)
    for (std::size_t b = 0; b < n; ++b) {
      if (L(b, j).is_zero()) continue;
      auto it = col.find({i, b});
      if (it != col.end()) sys(e, it->second) -= L(b, j);
    }
    if (i == j) rhs[e] = F(static_cast<long long>(weights[i]));
  }
  if (rank(sys) != unk.size()) return std::nullopt;
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  Matrix<F> lam(n, n);
  for (std::size_t u = 0; u < unk.size(); ++u) lam(unk[u].first, unk[u].second) = (*x)[u];
  return lam;
}

template <typename F>
ValidationReport check_triple(const Sl2Triple<F>& t) {
  ValidationReport rep;
  if (!(commutator(t.L, t.Lam) == t.H)) rep.fail("[L, Lam] != H");
  if (!(commutator(t.H, t.L) == t.L * F(2))) rep.fail("[H, L] != 2L");
  if (!(commutator(t.H, t.Lam) == t.Lam * F(-2))) rep.fail("[H, Lam] != -2 Lam");
  return rep;
}

template <typename F>
Sl2Triple<F> complete_sl2(const Matrix<F>& L, const std::vector<int>& weights, std::size_t solve_limit) {
  if (!L.is_square() || weights.size() != L.rows()) throw DimensionError("complete_sl2: shape mismatch");
  Sl2Triple<F> t;
  t.L = L;
  t.H = weight_operator<F>(weights);
  t.Lam = lambda_from_strings(L, weights);
  if (lambda_unknowns<F>(weights) <= solve_limit) {
    t.cross_checked = true;
    auto solved = solve_lambda(L, weights);
    if (!solved) throw MathError("not an HL class: [L, Lam] = H has no unique solution");
    if (!(*solved == t.Lam)) {
      t.formula_agreed = false;
      t.Lam = *solved;
    }
  }
  if (!check_triple(t).ok) throw MathError("not an HL class: triple relations fail");
  return t;
}

template <typename F>
Sl2Triple<F> complete_sl2(const GradedAlgebra<F>& r, const Vec<F>& a, std::size_t solve_limit) {
  return complete_sl2(cup_operator(r, a), degree_weights(r), solve_limit);
}

template <typename F>
std::vector<PrimitiveComponent<F>> primitive_decomposition(const Sl2Triple<F>& t, const Vec<F>& x) {
  if (!check_triple(t).ok) throw ValidationError("primitive_decomposition: invalid sl2 triple");
  std::vector<PrimitiveComponent<F>> out;
  if (is_zero_vec(x)) return out;
  Vec<F> hx = t.H * x;
  std::size_t lead = 0;
  while (x[lead].is_zero()) ++lead;
  F lam = hx[lead] / x[lead];
  if (!(hx == scale(lam, x))) throw ValidationError("primitive_decomposition: element is not an H-eigenvector");
  const long u = integer_value(lam, static_cast<long>(2 * t.H.rows() + 2));
  Vec<F> rest = x;
  while (!is_zero_vec(rest)) {
    // largest J with Lam^J rest != 0 isolates the component L^J x_J
    std::vector<Vec<F>> lams{rest};
    while (true) {
      Vec<F> next = t.Lam * lams.back();
      if (is_zero_vec(next)) break;
      lams.push_back(std::move(next));
    }
    const int J = static_cast<int>(lams.size()) - 1;
    const long m = -(u - 2 * J);
    if (m < 0) throw MathError("primitive_decomposition: component above the middle weight");
    F c(1);
    for (int s = 1; s <= J; ++s) c *= F(static_cast<long long>(s) * (m - s + 1));
    Vec<F> xj = scale(F(1) / c, lams.back());
    Vec<F> lx = xj;
    for (int s = 0; s < J; ++s) lx = t.L * lx;
    rest = rest - lx;
    out.push_back({J, static_cast<int>(-m), std::move(xj)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.j < b.j; });
  return out;
}

template <typename F>
SymplecticTriples<F> symplectic_triples(const BigradedAlgebra<F>& b) {
  return {complete_sl2(b.ring.left_mult(b.sigma), b.p_weights()),
          complete_sl2(b.ring.left_mult(b.sigma_bar), b.q_weights())};
}

template <typename F>
ValidationReport symplectic_hl_check(const BigradedAlgebra<F>& b) {
  ValidationReport rep = validate_bigrading(b);
  if (!rep.ok) return rep;
  const Matrix<F> ls = b.ring.left_mult(b.sigma), lsb = b.ring.left_mult(b.sigma_bar);
  const int n = b.n;
  Matrix<F> ps = Matrix<F>::identity(b.ring.size()), psb = ps;
  for (int j = 1; j <= 2 * n; ++j) {
    ps = ls * ps;
    psb = lsb * psb;
    for (int q = 0; q <= 2 * n; ++q) {
      auto src = indices_where(b.pq, n - j, q), dst = indices_where(b.pq, n + j, q);
      if (!src.empty() || !dst.empty())
        if (!bijective(restrict(ps, dst, src)))
          rep.fail("L_sigma^" + std::to_string(j) + " not bijective on (" + std::to_string(n - j) + "," +
                   std::to_string(q) + ")");
      auto src2 = indices_where(b.pq, q, n - j), dst2 = indices_where(b.pq, q, n + j);
      if (!src2.empty() || !dst2.empty())
        if (!bijective(restrict(psb, dst2, src2)))
          rep.fail("L_sigma-bar^" + std::to_string(j) + " not bijective on (" + std::to_string(q) + "," +
                   std::to_string(n - j) + ")");
    }
  }
  return rep;
}

template <typename F>
ValidationReport simultaneous_primitivity_check(const BigradedAlgebra<F>& b) {
  ValidationReport rep;
  SymplecticTriples<F> t;
  try {
    t = symplectic_triples(b);
  } catch (const MathError& e) {
    rep.fail(e.what());
    return rep;
  }
  if (!commutator(t.sigma.Lam, t.sigma_bar.Lam).is_zero()) rep.fail("[Lam_sigma, Lam_sigma-bar] != 0");
  if (!commutator(t.sigma.L, t.sigma_bar.Lam).is_zero()) rep.fail("[L_sigma, Lam_sigma-bar] != 0");
  if (!commutator(t.sigma_bar.L, t.sigma.Lam).is_zero()) rep.fail("[L_sigma-bar, Lam_sigma] != 0");
  for (std::size_t i = 0; i < b.ring.size(); ++i) {
    for (const auto& y : primitive_decomposition(t.sigma_bar, b.ring.basis_vector(i)))
      for (const auto& z : primitive_decomposition(t.sigma, y.x))
        if (!is_zero_vec(t.sigma_bar.Lam * z.x)) {
          rep.fail("sigma-primitive piece of " + b.ring.label(i) + " is not sigma-bar-primitive");
          break;
        }
  }
  return rep;
}

#define LLV_INSTANTIATE(F)                                                                                  \
  template Matrix<F> cup_operator<F>(const GradedAlgebra<F>&, const Vec<F>&);                              \
  template std::vector<int> degree_weights<F>(const GradedAlgebra<F>&);                                    \
  template Matrix<F> weight_operator<F>(const std::vector<int>&);                                          \
  template bool hl_test<F>(const GradedAlgebra<F>&, const Vec<F>&);                                        \
  template Sl2Triple<F> complete_sl2<F>(const Matrix<F>&, const std::vector<int>&, std::size_t);           \
  template Sl2Triple<F> complete_sl2<F>(const GradedAlgebra<F>&, const Vec<F>&, std::size_t);              \
  template std::optional<Matrix<F>> solve_lambda<F>(const Matrix<F>&, const std::vector<int>&);            \
  template ValidationReport check_triple<F>(const Sl2Triple<F>&);                                          \
  template std::vector<PrimitiveComponent<F>> primitive_decomposition<F>(const Sl2Triple<F>&, const Vec<F>&); \
  template SymplecticTriples<F> symplectic_triples<F>(const BigradedAlgebra<F>&);                          \
  template ValidationReport symplectic_hl_check<F>(const BigradedAlgebra<F>&);                             \
  template ValidationReport simultaneous_primitivity_check<F>(const BigradedAlgebra<F>&);

LLV_INSTANTIATE(Rational)
LLV_INSTANTIATE(Gaussian)

}  // namespace llv
