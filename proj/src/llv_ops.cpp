#include "llv/llv_ops.hpp"

#include "llv/fixtures.hpp"

namespace llv {

namespace {

std::vector<long> t_sequence(int bound) {
  std::vector<long> t{0};
  for (long k = 1; k <= bound; ++k) {
    t.push_back(k);
    t.push_back(-k);
  }
  return t;
}

Matrix<Gaussian> i_times(const Matrix<Rational>& m) {
  return m.map<Gaussian>([](const Rational& x) { return Gaussian(Rational(0), x); });
}

}  // namespace

std::vector<Vec<Rational>> hl_spanning_classes(const GradedAlgebra<Rational>& r) {
  const int m = r.dim(2);
  std::optional<Vec<Rational>> w;
  for (int i = 0; i < m && !w; ++i) {
    Vec<Rational> b = r.basis_vector(r.offset(2) + i);
    if (hl_test(r, b)) w = b;
  }
  for (int i = 0; i < m && !w; ++i)
    for (int j = i + 1; j < m && !w; ++j) {
      Vec<Rational> b = r.basis_vector(r.offset(2) + i) + r.basis_vector(r.offset(2) + j);
      if (hl_test(r, b)) w = b;
    }
  if (!w) {
    Vec<Rational> b = r.zero();
    for (int i = 0; i < m; ++i) b[r.offset(2) + i] = Rational(1);
    if (m > 0 && hl_test(r, b)) w = b;
  }
  if (!w) throw MathError("no HL class among the enumerated degree-2 classes");
  std::vector<Vec<Rational>> out{*w};
  for (int i = 0; i < m; ++i) {
    Vec<Rational> b = r.basis_vector(r.offset(2) + i);
    bool found = false;
    for (long t : t_sequence(6)) {
      Vec<Rational> c = b + scale(Rational(t), *w);
      if (c == *w) {
        found = true;
        break;
      }
      if (hl_test(r, c)) {
        out.push_back(c);
        found = true;
        break;
      }
    }
    if (!found) throw MathError("no HL class of the form b + t w for basis vector " + r.label(r.offset(2) + i));
  }
  return out;
}

LlvGenerators llv_generators(const GradedAlgebra<Rational>& r) {
  LlvGenerators g;
  g.classes = hl_spanning_classes(r);
  for (const auto& a : g.classes) {
    g.triples.push_back(complete_sl2(r, a));
    g.matrices.push_back(g.triples.back().L);
    g.matrices.push_back(g.triples.back().Lam);
  }
  return g;
}

bool dual_lefschetz_commute(const GradedAlgebra<Rational>& r, const Vec<Rational>& a, const Vec<Rational>& b) {
  auto ta = complete_sl2(r, a);
  auto tb = complete_sl2(r, b);
  return commutator(ta.Lam, tb.Lam).is_zero();
}

WeilResult weil_operator(const BigradedAlgebra<Rational>& b) {
  auto g = b.ring.cast<Gaussian>();
  Vec<Gaussian> s(b.sigma.begin(), b.sigma.end()), sb(b.sigma_bar.begin(), b.sigma_bar.end());
  Vec<Gaussian> gamma = s + sb;
  Vec<Gaussian> gamma_p = scale(-Gaussian::i(), s - sb);
  auto t = complete_sl2(g, gamma_p);
  WeilResult w;
  w.C = commutator(g.left_mult(gamma), t.Lam);
  Vec<Rational> d;
  for (const auto& [p, q] : b.pq) d.push_back(Rational(p - q));
  w.expected = i_times(Matrix<Rational>::diagonal(d));
  w.ok = w.C == w.expected;
  return w;
}

DerivationResult derivation_check(const Matrix<Rational>& D, const GradedAlgebra<Rational>& r) {
  DerivationResult res;
  const std::size_t n = r.size();
  if (D.rows() != n || D.cols() != n) throw DimensionError("derivation_check: operator size differs from ring");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(D(i, j).is_zero()) && r.degree_of(i) != r.degree_of(j)) {
        res.ok = false;
        res.reason = "operator does not preserve degree";
        return res;
      }
  std::vector<Vec<Rational>> dcol(n);
  for (std::size_t i = 0; i < n; ++i) dcol[i] = D.col(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<Rational> xy = to_dense(r.product(i, j), n);
      Vec<Rational> lhs = D * xy;
      Vec<Rational> rhs = r.multiply(dcol[i], r.basis_vector(j)) + r.multiply(r.basis_vector(i), dcol[j]);
      if (!(lhs == rhs)) {
        res.ok = false;
        res.witness = std::make_pair(i, j);
        res.reason = "Leibniz rule fails on (" + r.label(i) + ", " + r.label(j) + ")";
        return res;
      }
    }
  return res;
}

So41Result so41_subalgebra(const GradedAlgebra<Rational>& r, const QuadraticForm& q,
                           const std::vector<Vec<Rational>>& w) {
  if (w.size() != 3) throw DimensionError("so41_subalgebra needs three classes");
  for (const auto& x : w) {
    if (x.size() != q.dim()) throw DimensionError("class length differs from the form");
    if (q(x).sign() <= 0) throw ValidationError("so41_subalgebra: classes must be positive");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!q.pair(w[i], w[j]).is_zero()) throw ValidationError("so41_subalgebra: classes must be orthogonal");

  So41Result res;
  res.omegas = w;
  const Rational c = q(w[0]);
  for (int i = 1; i < 3; ++i) {
    auto f = (c / q(w[i])).sqrt_exact();
    if (!f) {
      res.skipped = "norms " + c.to_string() + " and " + q(w[i]).to_string() + " differ by a non-square";
      break;
    }
    res.omegas[i] = scale(*f, w[i]);
  }

  std::vector<Sl2Triple<Rational>> t;
  std::vector<Matrix<Rational>> gens;
  for (const auto& x : res.omegas) {
    t.push_back(complete_sl2(r, r.embed(2, x)));
    gens.push_back(t.back().L);
    gens.push_back(t.back().Lam);
  }
  res.dim = lie_closure(gens).dim();
  if (!res.skipped.empty()) return res;

  auto K = [&](int i, int j) { return commutator(t[i].L, t[j].Lam); };
  const Matrix<Rational>& H = t[0].H;
  bool anti = true, kk = true, kh = true, kl = true, klam = true, klk = true, klamk = true, lamlam = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      Matrix<Rational> kij = K(i, j);
      anti = anti && kij == -K(j, i);
      kk = kk && commutator(kij, K(j, k)) == K(i, k) * Rational(2);
      kh = kh && commutator(kij, H).is_zero();
      kl = kl && commutator(kij, t[j].L) == t[i].L * Rational(2);
      klam = klam && commutator(kij, t[j].Lam) == t[i].Lam * Rational(2);
      klk = klk && commutator(kij, t[k].L).is_zero();
      klamk = klamk && commutator(kij, t[k].Lam).is_zero();
      lamlam = lamlam && commutator(t[i].Lam, t[j].Lam).is_zero();
    }
  res.relations = {{"K_ij = -K_ji", anti},
                   {"[K_ij, K_jk] = 2 K_ik", kk},
                   {"[K_ij, H] = 0", kh},
                   {"[K_ij, L_j] = 2 L_i", kl},
                   {"[K_ij, Lam_j] = 2 Lam_i", klam},
                   {"[K_ij, L_k] = 0", klk},
                   {"[K_ij, Lam_k] = 0", klamk},
                   {"[Lam_i, Lam_j] = 0", lamlam}};
  return res;
}

So4Result so4_symplectic(const BigradedAlgebra<Rational>& b) {
  So4Result res;
  auto st = symplectic_triples(b);
  const std::vector<Matrix<Rational>> six{st.sigma.L,   st.sigma.Lam,   st.sigma.H,
                                          st.sigma_bar.L, st.sigma_bar.Lam, st.sigma_bar.H};
  MatrixLieAlgebra<Rational> span(b.ring.size());
  for (const auto& m : six) span.echelon().insert(flatten(m));
  res.span_rank = span.dim();
  auto alg = lie_closure(six);
  res.closure_dim = alg.dim();
  res.triples_ok = check_triple(st.sigma).ok && check_triple(st.sigma_bar).ok;
  res.commuting = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) res.commuting = res.commuting && commutator(six[i], six[j]).is_zero();
  auto w = weil_operator(b);
  res.weil_in_span = w.ok && alg.contains(st.sigma.H - st.sigma_bar.H);
  return res;
}

VerbitskyResult verbitsky_component(const GradedAlgebra<Rational>& r, const std::vector<Vec<Rational>>& hl_classes) {
  VerbitskyResult res;
  const int kmax = r.top_degree() / 2;
  res.pieces.push_back(Subspace<Rational>::full(r.dim(0)));
  for (int k = 1; k <= kmax; ++k) {
    std::vector<Vec<Rational>> gens;
    for (int i = 0; i < r.dim(2); ++i) {
      Vec<Rational> x = r.basis_vector(r.offset(2) + i);
      for (const auto& y : res.pieces.back().vectors())
        gens.push_back(r.component(r.multiply(x, r.embed(2 * k - 2, y)), 2 * k));
    }
    res.pieces.push_back(Subspace<Rational>::span(gens, r.dim(2 * k)));
  }
  for (const auto& p : res.pieces) res.dims.push_back(static_cast<int>(p.dim()));
  if (r.top_degree() % 4 == 0) {
    const int n = r.top_degree() / 4;
    for (int k = 0; k <= 2 * n; ++k) res.expected.push_back(static_cast<int>(sym_dim(r.dim(2), k <= n ? k : 2 * n - k)));
    res.dims_match = res.dims == res.expected;
  }

  res.lambda_stable = true;
  res.identity_holds = true;
  for (const auto& a : hl_classes) {
    auto t = complete_sl2(r, a);
    for (int k = 1; k <= kmax; ++k)
      for (const auto& yv : res.pieces[k].vectors()) {
        Vec<Rational> y = r.embed(2 * k, yv);
        Vec<Rational> ly = t.Lam * y;
        if (!r.is_homogeneous(ly, 2 * k - 2) || !res.pieces[k - 1].contains(r.component(ly, 2 * k - 2)))
          res.lambda_stable = false;
      }
    for (int i = 0; i < r.dim(2); ++i) {
      Vec<Rational> x = r.basis_vector(r.offset(2) + i);
      Matrix<Rational> lx = r.left_mult(x);
      Matrix<Rational> comm = commutator(lx, t.Lam);
      for (int k = 1; k <= kmax; ++k)
        for (const auto& yv : res.pieces[k - 1].vectors()) {
          Vec<Rational> y = r.embed(2 * k - 2, yv);
          Vec<Rational> lhs = t.Lam * r.multiply(x, y);
          Vec<Rational> rhs = lx * (t.Lam * y) - comm * y;
          if (!(lhs == rhs)) res.identity_holds = false;
        }
    }
  }
  return res;
}

}  // namespace llv
