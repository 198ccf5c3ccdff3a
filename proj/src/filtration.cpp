#include "llv/filtration.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "llv/lefschetz.hpp"
#include "llv/lie_algebra.hpp"
#include "llv/spectrum.hpp"

namespace llv {

namespace {

using Sub = Subspace<Rational>;

Matrix<Rational> block(const GradedAlgebra<Rational>& r, const Matrix<Rational>& op, int row_deg, int col_deg) {
  return op.block(r.offset(row_deg), r.offset(col_deg), r.dim(row_deg), r.dim(col_deg));
}

int four_n(const GradedAlgebra<Rational>& r) {
  if (r.top_degree() % 4 != 0) throw DimensionError("perverse filtration needs top degree divisible by 4");
  return r.top_degree();
}

// integer multiple with coprime entries
Vec<Rational> primitive_integral(const Vec<Rational>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) {
    mpq_class q = x.to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  Vec<Rational> out;
  for (const auto& x : v) {
    mpq_class q = x.to_mpq() * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    out.push_back(Rational(q));
  }
  if (g == 0) return v;
  for (auto& x : out) x = x / Rational(mpq_class(g));
  return out;
}

// matrix of Y -> left Y - Y right on row-major flattened n x n matrices
Matrix<Rational> ad_system(const Matrix<Rational>& left, const Matrix<Rational>& right, std::size_t n) {
  Matrix<Rational> a(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!left(i, k).is_zero()) a(i * n + j, k * n + j) += left(i, k);
        if (!right(k, j).is_zero()) a(i * n + j, i * n + k) -= right(k, j);
      }
  return a;
}

// matrix of Y -> A Y B
Matrix<Rational> sandwich(const Matrix<Rational>& a, const Matrix<Rational>& b, std::size_t n) {
  Matrix<Rational> m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j)
          if (!b(l, j).is_zero()) m(i * n + j, k * n + l) += a(i, k) * b(l, j);
    }
  return m;
}

Filtration from_eigen(const std::map<long, Sub>& es, std::size_t n, int center) {
  std::map<int, Sub> steps;
  const int d = static_cast<int>(n);
  for (int j = -d - 1; j <= d + 1; ++j) {
    Sub s = Sub::zero(n);
    for (const auto& [lam, e] : es)
      if (lam <= j) s = s + e;
    steps.emplace(center + j, std::move(s));
  }
  return make_filtration(center, n, steps);
}

Filtration perverse_impl(const GradedAlgebra<Rational>& r, const Vec<Rational>& beta, int k) {
  const int n = four_n(r) / 4;
  const std::size_t dk = static_cast<std::size_t>(r.dim(k));
  const Matrix<Rational> L = cup_operator(r, beta);
  std::vector<Matrix<Rational>> pw{Matrix<Rational>::identity(r.size())};
  for (int j = 1; j <= 2 * n + 1; ++j) pw.push_back(L * pw.back());

  auto ker = [&](int j) {
    if (j <= 0) return Sub::zero(dk);
    if (k + 2 * j > r.top_degree() || j > 2 * n + 1) return Sub::full(dk);
    return kernel(block(r, pw[j], k + 2 * j, k));
  };
  auto im = [&](int j) {
    if (j == 0) return Sub::full(dk);
    const int src = k - 2 * j;
    if (src < 0 || r.dim(src) == 0) return Sub::zero(dk);
    return column_space(block(r, pw[j], k, src));
  };

  std::map<int, Sub> steps;
  for (int m = k - 4 * n - 1; m <= k + 1; ++m) {
    Sub s = Sub::zero(dk);
    for (int i = 1; i <= 2 * n + 1; ++i) s = s + intersect(ker(2 * n + m + i - k), im(i - 1));
    steps.emplace(m, std::move(s));
  }
  return make_filtration(k, dk, steps);
}

template <bool Parallel>
PwResult pw_impl(const GradedAlgebra<Rational>& r, const LagrangianTriple& t, const QuadraticForm& q) {
  const int n = four_n(r) / 4;
  const Matrix<Rational> N = lagrangian_monodromy(r, t, q);
  std::vector<int> degs;
  for (int k = 0; k <= r.top_degree(); ++k)
    if (r.dim(k) > 0) degs.push_back(k);
  PwResult res;
  res.window_lo = -2 * n - 2;
  res.window_hi = 2 * n + 2;
  res.degrees.resize(degs.size());
  const long nd = static_cast<long>(degs.size());
  auto work = [&](long i) {
    const int k = degs[i];
    PwDegree& d = res.degrees[i];
    d.degree = k;
    d.P = perverse_filtration(r, t.beta, k, q);
    d.W = weight_filtration(degree_block(r, N, k), k);
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nd; ++i) work(i);
  } else {
    for (long i = 0; i < nd; ++i) work(i);
  }

  std::size_t best_count = 0;
  int best = 0;
  bool have_best = false;
  for (int s = res.window_lo; s <= res.window_hi; ++s) {
    std::size_t count = 0;
    for (const auto& d : res.degrees) count += pw_compare(d.P, d.W, s).match ? 1 : 0;
    if (!have_best || count > best_count || (count == best_count && std::abs(s) < std::abs(best))) {
      best = s;
      best_count = count;
      have_best = true;
    }
    if (count == res.degrees.size() && !res.shift) res.shift = s;
  }
  const int used = res.shift ? *res.shift : best;
  for (auto& d : res.degrees) d.cmp = pw_compare(d.P, d.W, used);
  return res;
}

}  // namespace

Sub Filtration::at(int m) const {
  if (m < lo || steps.empty()) return m < lo ? Sub::zero(ambient) : Sub::full(ambient);
  if (m > hi()) return Sub::full(ambient);
  return steps[static_cast<std::size_t>(m - lo)];
}

std::map<int, int> Filtration::graded_dims() const {
  std::map<int, int> g;
  for (int m = lo; m <= hi(); ++m) {
    const int d = static_cast<int>(at(m).dim()) - static_cast<int>(at(m - 1).dim());
    if (d != 0) g[m] = d;
  }
  return g;
}

bool Filtration::increasing() const {
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (!steps[i + 1].contains(steps[i])) return false;
  return steps.empty() || steps.back().dim() == ambient;
}

Filtration make_filtration(int degree, std::size_t ambient, const std::map<int, Sub>& steps) {
  Filtration f;
  f.degree = degree;
  f.ambient = ambient;
  if (steps.empty()) throw ValidationError("make_filtration: no steps");
  auto first = steps.begin();
  while (first != steps.end() && first->second.dim() == 0) ++first;
  if (first == steps.end()) throw ValidationError("make_filtration: filtration never becomes nonzero");
  if (ambient == 0) {
    f.lo = first->first;
    f.steps.push_back(first->second);
    return f;
  }
  if (first == steps.begin()) throw ValidationError("make_filtration: range does not start at zero");
  f.lo = first->first;
  for (auto it = first; it != steps.end(); ++it) {
    f.steps.push_back(it->second);
    if (it->second.dim() == ambient) return f;
  }
  throw ValidationError("make_filtration: filtration never becomes full");
}

Filtration perverse_filtration(const GradedAlgebra<Rational>& r, const Vec<Rational>& beta, int k,
                               const QuadraticForm& q) {
  if (beta.size() != q.dim() || static_cast<int>(beta.size()) != r.dim(2))
    throw DimensionError("perverse_filtration: class length differs from degree 2");
  if (is_zero_vec(beta)) throw ValidationError("perverse_filtration: class is zero");
  if (!q(beta).is_zero()) throw ValidationError("perverse_filtration: class is not isotropic");
  return perverse_impl(r, r.embed(2, beta), k);
}

Filtration perverse_filtration_unchecked(const GradedAlgebra<Rational>& r, const Vec<Rational>& beta, int k) {
  return perverse_impl(r, beta, k);
}

ValidationReport perverse_hodge_check(const BigradedAlgebra<Rational>& b) {
  ValidationReport rep;
  const auto& r = b.ring;
  const int n = b.n;
  for (int k = 0; k <= r.top_degree(); ++k) {
    if (r.dim(k) == 0) continue;
    Filtration f = perverse_filtration_unchecked(r, b.sigma_bar, k);
    const std::size_t dk = static_cast<std::size_t>(r.dim(k));
    for (int m = k - 4 * n - 2; m <= k + 2; ++m) {
      std::vector<Vec<Rational>> gens;
      for (std::size_t i = 0; i < dk; ++i)
        if (b.pq[r.offset(k) + i].first <= m + n) gens.push_back(unit_vec<Rational>(dk, i));
      Sub expected = gens.empty() ? Sub::zero(dk) : Sub::span(gens, dk);
      if (!(f.at(m) == expected))
        rep.fail("degree " + std::to_string(k) + ", index " + std::to_string(m) + ": perverse step of dim " +
                 std::to_string(f.at(m).dim()) + " differs from Hodge sum of dim " + std::to_string(expected.dim()));
    }
  }
  return rep;
}

int nilpotent_index(const Matrix<Rational>& N) {
  if (!N.is_square()) throw DimensionError("nilpotent_index of non-square matrix");
  Matrix<Rational> p = N;
  for (std::size_t d = 1; d <= std::max<std::size_t>(N.rows(), 1); ++d) {
    if (p.is_zero()) return static_cast<int>(d);
    p = p * N;
  }
  throw MathError("operator is not nilpotent");
}

Filtration weight_filtration_formula(const Matrix<Rational>& N, int center) {
  const int idx = nilpotent_index(N);
  const std::size_t n = N.rows();
  std::vector<Matrix<Rational>> pw{Matrix<Rational>::identity(n)};
  for (int j = 1; j <= 2 * idx + 1; ++j) pw.push_back(N * pw.back());
  auto power = [&](int j) { return j < static_cast<int>(pw.size()) ? pw[j] : Matrix<Rational>(n, n); };
  std::map<int, Sub> steps;
  for (int k = -idx - 1; k <= idx; ++k) {
    Sub s = Sub::zero(n);
    for (int j = std::max(0, -k); j <= idx; ++j) {
      if (k + j + 1 <= 0) continue;
      s = s + intersect(kernel(power(k + j + 1)), column_space(power(j)));
    }
    steps.emplace(center + k, std::move(s));
  }
  return make_filtration(center, n, steps);
}

Filtration weight_filtration_sl2(const Matrix<Rational>& nilp, int center) {
  nilpotent_index(nilp);
  const std::size_t n = nilp.rows();
  if (n == 0 || nilp.is_zero()) return from_eigen({{0, Sub::full(n)}}, n, center);
  // a positive multiple has the same weight filtration; integer entries keep the solves small
  mpz_class l = 1;
  for (const auto& x : nilp.data()) {
    mpq_class q = x.to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  const Matrix<Rational> N = nilp * Rational(mpq_class(l));
  // Y -> [Y, N]
  const Matrix<Rational> adn = ad_system(-N, -N, n);
  // Y0 with [[Y0, N], N] = Y0 N^2 - 2 N Y0 N + N^2 Y0 = -2N, then H = [Y0, N]
  const Matrix<Rational> id = Matrix<Rational>::identity(n), n2 = N * N;
  Matrix<Rational> twice = sandwich(id, n2, n);
  twice -= sandwich(N, N, n) * Rational(2);
  twice += sandwich(n2, id, n);
  auto y0 = solve(twice, flatten(N * Rational(-2)));
  if (!y0) throw MathError("weight_filtration: no sl2 partner for N");
  const Matrix<Rational> H = unflatten(adn * *y0, n);
  // Y with [Y, N] = H and [H, Y] = 2Y
  Matrix<Rational> a(2 * n * n, n * n);
  a.set_block(0, 0, adn);
  Matrix<Rational> adh = ad_system(H, H, n);
  for (std::size_t i = 0; i < n * n; ++i) adh(i, i) -= Rational(2);
  a.set_block(n * n, 0, adh);
  Vec<Rational> rhs = flatten(H);
  rhs.resize(2 * n * n);
  if (!solve(a, rhs)) throw MathError("weight_filtration: sl2 completion of N failed");
  std::vector<long> cand;
  for (long l = -static_cast<long>(n); l <= static_cast<long>(n); ++l) cand.push_back(l);
  return from_eigen(integer_eigenspaces(H, cand), n, center);
}

ValidationReport check_weight_filtration(const Matrix<Rational>& N, const Filtration& w, int center) {
  ValidationReport rep;
  if (w.ambient != N.rows()) {
    rep.fail("filtration ambient differs from operator size");
    return rep;
  }
  if (!w.increasing()) rep.fail("filtration is not increasing and exhaustive");
  for (int j = w.lo; j <= w.hi() + 2; ++j)
    if (!w.at(j - 2).contains(w.at(j).image_under(N))) rep.fail("N W_" + std::to_string(j) + " not in W_" + std::to_string(j - 2));
  auto gr = [&](int j) { return static_cast<long>(w.at(j).dim()) - static_cast<long>(w.at(j - 1).dim()); };
  Matrix<Rational> p = Matrix<Rational>::identity(N.rows());
  const int span = std::max(std::abs(w.lo - center), std::abs(w.hi() - center)) + 1;
  for (int j = 0; j <= span; ++j) {
    if (j > 0) p = p * N;
    if (gr(center + j) != gr(center - j))
      rep.fail("gr_" + std::to_string(center + j) + " and gr_" + std::to_string(center - j) + " differ in dimension");
    if (!(w.at(center + j).image_under(p) + w.at(center - j - 1) == w.at(center - j)))
      rep.fail("N^" + std::to_string(j) + " is not onto gr_" + std::to_string(center - j));
  }
  return rep;
}

Filtration weight_filtration(const Matrix<Rational>& N, int center, std::size_t jm_limit) {
  Filtration f = weight_filtration_formula(N, center);
  if (N.rows() <= jm_limit) {
    Filtration g = weight_filtration_sl2(N, center);
    bool same = f.lo == g.lo && f.hi() == g.hi();
    for (int m = std::min(f.lo, g.lo); same && m <= std::max(f.hi(), g.hi()); ++m) same = f.at(m) == g.at(m);
    if (!same) throw MathError("weight_filtration: sl2 and kernel/image routes disagree");
  }
  auto rep = check_weight_filtration(N, f, center);
  if (!rep.ok) throw MathError("weight_filtration: " + rep.issues.front());
  return f;
}

bool nilpotent_orbit_check(const Matrix<Rational>& N, const Vec<Gaussian>& x, const QuadraticForm& q) {
  if (N.rows() != x.size() || q.dim() != x.size()) throw DimensionError("nilpotent_orbit_check: size mismatch");
  Vec<Gaussian> nx = to_gaussian(N) * x;
  Vec<Gaussian> cx(nx.size());
  for (std::size_t i = 0; i < nx.size(); ++i) cx[i] = nx[i].conj();
  Gaussian v = q.pair(nx, cx);
  if (!v.im().is_zero()) throw MathError("internal: q(Nx, conj Nx) is not real");
  return v.re().sign() > 0;
}

ValidationReport validate_triple(const LagrangianTriple& t, const QuadraticForm& q) {
  ValidationReport rep;
  if (t.beta.size() != q.dim() || t.eta.size() != q.dim() || t.rho.size() != q.dim()) {
    rep.fail("triple classes have the wrong length");
    return rep;
  }
  if (is_zero_vec(t.beta)) rep.fail("beta is zero");
  if (!q(t.beta).is_zero()) rep.fail("q(beta) != 0");
  if (!q(t.eta).is_zero()) rep.fail("q(eta) != 0");
  if (q(t.rho).sign() <= 0) rep.fail("q(rho) <= 0");
  if (!q.pair(t.eta, t.rho).is_zero()) rep.fail("q(eta, rho) != 0");
  if (!q.pair(t.beta, t.rho).is_zero()) rep.fail("q(beta, rho) != 0");
  return rep;
}

LagrangianTriple find_lagrangian_triple(const QuadraticForm& q, int bound) {
  return lagrangian_triple_for(q, find_isotropic(q, bound));
}

LagrangianTriple lagrangian_triple_for(const QuadraticForm& q, const Vec<Rational>& beta) {
  const std::size_t m = q.dim();
  if (beta.size() != m) throw DimensionError("beta length differs from the form");
  if (is_zero_vec(beta) || !q(beta).is_zero()) throw ValidationError("β must be isotropic and nonzero");
  LagrangianTriple t;
  t.beta = beta;
  auto perp = [&](const Vec<Rational>& v) {
    Matrix<Rational> row(1, m);
    Vec<Rational> qv = q.gram() * v;
    for (std::size_t i = 0; i < m; ++i) row(0, i) = qv[i];
    return kernel(row);
  };
  Sub bp = perp(t.beta);
  Matrix<Rational> restricted = bp.basis() * q.gram() * bp.basis().transpose();
  auto dz = congruence_diagonalize(restricted);
  std::optional<Vec<Rational>> rho;
  for (std::size_t i = 0; i < dz.diag.size() && !rho; ++i)
    if (dz.diag[i].sign() > 0) rho = bp.basis().transpose() * dz.basis.row(i);
  if (!rho) throw MathError("no positive class orthogonal to the isotropic class");
  t.rho = primitive_integral(*rho);
  Sub rp = perp(t.rho);
  for (const auto& w : rp.vectors()) {
    const Rational bw = q.pair(t.beta, w);
    if (bw.is_zero()) continue;
    t.eta = primitive_integral(w - scale(q(w) / (Rational(2) * bw), t.beta));
    return t;
  }
  throw MathError("no isotropic partner for beta orthogonal to rho");
}

Matrix<Rational> degree_block(const GradedAlgebra<Rational>& r, const Matrix<Rational>& op, int k) {
  return block(r, op, k, k);
}

Matrix<Rational> lagrangian_monodromy(const GradedAlgebra<Rational>& r, const LagrangianTriple& t,
                                      const QuadraticForm& q) {
  auto rep = validate_triple(t, q);
  if (!rep.ok) throw ValidationError("invalid Lagrangian triple: " + rep.issues.front());
  if (static_cast<int>(q.dim()) != r.dim(2)) throw DimensionError("form size differs from degree 2");
  const Matrix<Rational> L = cup_operator(r, r.embed(2, t.beta));
  const auto tr = complete_sl2(r, r.embed(2, t.rho));
  Matrix<Rational> N = commutator(L, tr.Lam);
  nilpotent_index(N);
  return N;
}

PwComparison pw_compare(const Filtration& P, const Filtration& W, int shift, int scale) {
  PwComparison c;
  if (P.ambient != W.ambient || scale <= 0) return c;
  auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const int lo = std::min(P.lo, floor_div(W.lo - shift, scale)) - 1;
  const int hi = std::max(P.hi(), floor_div(W.hi() - shift, scale) + 1) + 1;
  c.match = true;
  for (int m = lo; m <= hi; ++m) {
    Sub p = P.at(m), w = W.at(scale * m + shift);
    c.rows.push_back({m, static_cast<int>(p.dim()), static_cast<int>(w.dim())});
    if (!(p == w)) c.match = false;
  }
  // W may only jump at compared indices
  for (int j = W.lo; j <= W.hi(); ++j) {
    const int rem = ((j - shift) % scale + scale) % scale;
    if (rem != 0 && W.at(j).dim() != W.at(j - 1).dim()) c.match = false;
  }
  return c;
}

PwResult pw_check(const GradedAlgebra<Rational>& r, const LagrangianTriple& t, const QuadraticForm& q) {
  return pw_impl<true>(r, t, q);
}

PwResult pw_check_serial(const GradedAlgebra<Rational>& r, const LagrangianTriple& t, const QuadraticForm& q) {
  return pw_impl<false>(r, t, q);
}

}  // namespace llv
