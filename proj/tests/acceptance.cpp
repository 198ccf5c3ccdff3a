// Acceptance run: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "llv/bbf.hpp"
#include "llv/clifford.hpp"
#include "llv/filtration.hpp"
#include "llv/fixtures.hpp"
#include "llv/lefschetz.hpp"
#include "llv/lie_algebra.hpp"
#include "llv/llv_ops.hpp"
#include "llv/spectrum.hpp"

using namespace llv;
using Q = Rational;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

const BogomolovModel& model(const char* q, int n) {
  static std::map<std::pair<std::string, int>, BogomolovModel> cache;
  auto key = std::make_pair(std::string(q), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, bogomolov_model(QuadraticForm::parse(q), n)).first;
  return it->second;
}

const BogomolovModel& model52() { return model("diag:1,1,1,-1,-1", 2); }

std::vector<Vec<Q>> samples(std::size_t m, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Vec<Q>> out;
  while (out.size() < count) {
    Vec<Q> v(m);
    for (auto& x : v) x = Q(static_cast<long>(rng() % 5) - 2);
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + std::to_string(v[i]);
  return s;
}

Outcome structure_small() {
  const auto& bm = model52();
  auto gens = llv_generators(bm.ring);
  auto g = lie_closure(gens.matrices);
  auto so = so_identify(g, 5);
  const bool ok = g.dim() == 21 && so.exact_killing && so.compact == 9 && so.noncompact == 12 && so.pass;
  return {ok, "dim " + std::to_string(g.dim()) + ", Killing " + std::to_string(so.compact) + " compact / " +
                  std::to_string(so.noncompact) + " noncompact"};
}

Outcome structure_k3() {
  auto r = k3_ring(k3_form());
  auto gens = llv_generators(r);
  auto g = lie_closure(gens.matrices);
  auto gr = ad_grading(g, gens.triples[0].H);
  std::vector<std::size_t> dims{gr.g2.size(), gr.g0.size(), gr.gm2.size()};
  const bool ok = g.dim() == 276 && dims == std::vector<std::size_t>{22, 232, 22};
  return {ok, "dim " + std::to_string(g.dim()) + ", grading " + join(dims)};
}

Outcome hl_iff_nonisotropic() {
  struct Fixture {
    GradedAlgebra<Q> ring;
    QuadraticForm form;
    std::string name;
  };
  std::vector<Fixture> fx{{model52().ring, bbf_form(model52()), "model"}, {k3_ring(k3_form()), bbf_form(k3_ring(k3_form())), "k3"}};
  std::string detail;
  bool ok = true;
  for (const auto& f : fx) {
    auto cls = samples(f.form.dim(), 40, 31);
    for (auto& a : isotropic_classes(f.form, 20)) cls.push_back(a);
    int iso = 0, bad = 0;
    for (const auto& a : cls) {
      const bool z = f.form(a).is_zero();
      iso += z;
      bad += hl_test(f.ring, f.ring.embed(2, a)) == z;
    }
    ok = ok && bad == 0 && cls.size() >= 50 && iso > 0;
    detail += f.name + ": " + std::to_string(cls.size()) + " classes, " + std::to_string(iso) + " isotropic, " +
              std::to_string(bad) + " mismatches; ";
  }
  return {ok, detail};
}

Outcome commutativity() {
  const auto& bm = model52();
  const auto& r = bm.ring;
  auto cls = samples(5, 200, 41);
  std::vector<Vec<Q>> good;
  for (const auto& a : cls)
    if (!bm.q0(a).is_zero()) good.push_back(a);
  int pairs = 0, bad = 0;
  for (std::size_t k = 0; k + 1 < good.size() && pairs < 50; k += 2, ++pairs) {
    auto ta = complete_sl2(r, r.embed(2, good[k]));
    auto tb = complete_sl2(r, r.embed(2, good[k + 1]));
    bad += !commutator(ta.Lam, tb.Lam).is_zero();
  }
  auto st = symplectic_triples(bm.hodge);
  const bool lam = commutator(st.sigma.Lam, st.sigma_bar.Lam).is_zero();
  const bool mixed = commutator(st.sigma.L, st.sigma_bar.Lam).is_zero() && commutator(st.sigma_bar.L, st.sigma.Lam).is_zero();
  return {pairs == 50 && bad == 0 && lam && mixed,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " nonzero; [Lam_s, Lam_sb] = 0: " + (lam ? "yes" : "no") +
              ", [L_s, Lam_sb] = 0: " + (mixed ? "yes" : "no")};
}

Outcome weil() {
  auto w = weil_operator(model52().hodge);
  const bool eq = w.C == w.expected;
  return {w.ok && eq, std::string("[L_g, Lam_g'] ") + (eq ? "equals" : "differs from") + " i(H_s - H_sb)"};
}

Outcome so41_so4() {
  const auto& bm = model52();
  std::vector<Vec<Q>> w;
  for (int i = 0; i < 3; ++i) w.push_back(unit_vec<Q>(5, i));
  auto res = so41_subalgebra(bm.ring, bm.q0, w);
  int holds = 0;
  for (const auto& x : res.relations) holds += x.holds;
  auto s4 = so4_symplectic(bm.hodge);
  const bool ok = res.skipped.empty() && res.dim == 10 && res.relations.size() == 8 && holds == 8 && s4.span_rank == 6 &&
                  s4.closure_dim == 6 && s4.triples_ok && s4.commuting;
  return {ok, "so(4,1) dim " + std::to_string(res.dim) + ", " + std::to_string(holds) + "/8 relations; so(4) span " +
                  std::to_string(s4.span_rank) + ", closure " + std::to_string(s4.closure_dim) +
                  (s4.commuting ? ", commuting" : ", not commuting")};
}

Outcome verbitsky() {
  struct Case {
    const char* q;
    int b2, n;
  };
  bool ok = true;
  std::string detail;
  for (auto c : {Case{"diag:1,1,1,-1,-1", 5, 2}, Case{"diag:1,1,1,-1,-1,-1", 6, 2}, Case{"diag:1,1,1,-1,-1", 5, 3}}) {
    const auto& bm = model(c.q, c.n);
    auto v = verbitsky_component(bm.ring, hl_spanning_classes(bm.ring));
    std::vector<int> expected;
    for (int k = 0; k <= 2 * c.n; ++k) expected.push_back(static_cast<int>(sym_dim(c.b2, k <= c.n ? k : 2 * c.n - k)));
    auto iso = isotropic_classes(bm.q0, 100);
    int nonzero = 0;
    for (const auto& a : iso) nonzero += !is_zero_vec(bm.ring.power(bm.ring.embed(2, a), c.n + 1));
    ok = ok && v.dims == expected && iso.size() == 100 && nonzero == 0;
    detail += "(" + std::to_string(c.b2) + "," + std::to_string(c.n) + ") " + (v.dims == expected ? "dims ok" : "dims differ") +
              ", " + std::to_string(iso.size() - nonzero) + "/" + std::to_string(iso.size()) + " powers vanish; ";
  }
  return {ok, detail};
}

Outcome p_equals_w() {
  const auto& bm = model52();
  auto t = find_lagrangian_triple(bm.q0);
  auto N = lagrangian_monodromy(bm.ring, t, bm.q0);
  const int idx = nilpotent_index(degree_block(bm.ring, N, 2));
  auto res = pw_check(bm.ring, t, bm.q0);
  bool all = res.shift.has_value();
  for (const auto& d : res.degrees) all = all && d.cmp.match;
  return {all && idx == 3, "uniform shift " + (res.shift ? std::to_string(*res.shift) : std::string("none")) + ", index " +
                               std::to_string(idx) + " on degree 2"};
}

Outcome independence() {
  const auto& bm = model52();
  auto cls = isotropic_classes(bm.q0, 10);
  int bad = 0;
  for (int k = 0; k <= 8; k += 2) {
    auto ref = perverse_filtration(bm.ring, cls[0], k, bm.q0).graded_dims();
    for (const auto& b : cls) bad += perverse_filtration(bm.ring, b, k, bm.q0).graded_dims() != ref;
  }
  return {cls.size() == 10 && bad == 0, std::to_string(cls.size()) + " classes, " + std::to_string(bad) + " differing degrees"};
}

// polarization sign on C(h-perp), h the third positive direction when the form has three
std::optional<bool> one_sign(const QuadraticForm& q) {
  auto dz = congruence_diagonalize(q.gram());
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < dz.diag.size(); ++i)
    if (dz.diag[i].sign() > 0) pos.push_back(i);
  if (pos.size() < 2 || pos.size() > 3) return std::nullopt;
  Vec<Q> d;
  for (std::size_t i = 0; i < dz.diag.size(); ++i)
    if (pos.size() == 2 || i != pos[2]) d.push_back(dz.diag[i]);
  auto c = clifford(QuadraticForm::diagonal(d));
  auto a = cl_multiply(c->blade(1u << pos[0]), c->blade(1u << pos[1]));
  auto rep = polarization_form(*c, a);
  return rep.plus_passes != rep.minus_passes;
}

Outcome clifford_suite() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(53);
  auto element = [&](const CliffordAlgebra& c) {
    CliffordElement x = c.zero();
    for (auto& v : x.coeffs)
      if (rng() % 3 == 0) v = Q(static_cast<long>(rng() % 7) - 3);
    return x;
  };
  for (const char* spec : {"diag:1,1,-1", "diag:1,1,-1,-1", "diag:1,1,1,-1,-1", "diag:1,1,-1,-1,-1"}) {
    auto q = QuadraticForm::parse(spec);
    const std::size_t m = q.dim();
    auto c = clifford(q);
    bool dim = c->dim() == (std::size_t{1} << m);
    int rel = 0, tr = 0;
    for (const auto& v : samples(m, 100, 59)) {
      auto cv = c->vector(v);
      rel += cl_multiply(cv, cv) == c->blade(0, q(v));
    }
    for (int k = 0; k < 100; ++k) {
      auto x = element(*c), y = element(*c);
      tr += cl_trace(cl_multiply(x, y)) == cl_trace(cl_multiply(y, x));
    }
    auto mu = complex_structure(*c, unit_vec<Q>(m, 0), unit_vec<Q>(m, 1));
    const bool mu2 = cl_multiply(mu, mu) == c->blade(0, Q(-1));
    auto sign = one_sign(q);
    const bool pol = sign && *sign;
    ok = ok && dim && rel == 100 && tr == 100 && mu2 && pol;
    detail += std::string(spec) + (dim && rel == 100 && tr == 100 && mu2 && pol ? " ok; " : " FAILED; ");
  }
  return {ok, detail};
}

// N = S J S^-1 with S a product of integer elementary matrices; the oracle grades by the
// eigenvalues of H = S diag(s-1-2i) S^-1, the semisimple element of the standard triple
Outcome weight_oracle() {
  std::mt19937 rng(67);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> sizes;
    for (int left = n; left > 0;) {
      int s = std::min(left, 1 + static_cast<int>(rng() % 4));
      sizes.push_back(s);
      left -= s;
    }
    Matrix<Q> J(n, n), D(n, n);
    int o = 0;
    for (int s : sizes) {
      for (int i = 0; i < s; ++i) D(o + i, o + i) = Q(s - 1 - 2 * i);
      for (int i = 0; i + 1 < s; ++i) J(o + i + 1, o + i) = Q(1);
      o += s;
    }
    Matrix<Q> S = Matrix<Q>::identity(n), Si = Matrix<Q>::identity(n);
    for (int k = 0; k < 3 * n && n > 1; ++k) {
      const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      const Q c(static_cast<long>(rng() % 5) - 2);
      if (a == b || c.is_zero()) continue;
      for (int i = 0; i < n; ++i) S(i, b) += c * S(i, a);
      for (int j = 0; j < n; ++j) Si(a, j) -= c * Si(b, j);
    }
    const Matrix<Q> N = S * J * Si, H = S * D * Si;
    if (!(commutator(H, N) == N * Q(-2))) {
      ++bad;
      continue;
    }
    std::vector<long> cand;
    for (long l = -n; l <= n; ++l) cand.push_back(l);
    auto eig = integer_eigenspaces(H, cand);
    const int center = static_cast<int>(rng() % 5) - 2;
    auto w = weight_filtration(N, center);
    bool same = check_weight_filtration(N, w, center).ok;
    for (int j = -n - 1; j <= n && same; ++j) {
      std::vector<Vec<Q>> v;
      for (const auto& [lam, sp] : eig)
        if (lam <= j)
          for (const auto& x : sp.vectors()) v.push_back(x);
      const Subspace<Q> expected = v.empty() ? Subspace<Q>::zero(n) : Subspace<Q>::span(v, n);
      same = w.at(center + j) == expected;
    }
    bad += !same;
  }
  return {bad == 0, "200 nilpotents, " + std::to_string(bad) + " disagreements"};
}

Outcome fujiki() {
  struct Fixture {
    GradedAlgebra<Q> ring;
    QuadraticForm form;
    int n;
    std::string name;
  };
  std::vector<Fixture> fx{{model52().ring, bbf_form(model52()), 2, "(5,2)"},
                          {model("diag:1,1,1,-1,-1", 3).ring, bbf_form(model("diag:1,1,1,-1,-1", 3)), 3, "(5,3)"},
                          {k3_ring(k3_form()), bbf_form(k3_ring(k3_form())), 1, "k3"}};
  bool ok = true;
  std::string detail;
  for (const auto& f : fx) {
    auto cls = samples(f.form.dim(), 100, 71);
    std::optional<Q> c;
    int bad = 0;
    for (const auto& a : cls) {
      const Q top = f.ring.integrate(f.ring.power(f.ring.embed(2, a), 2 * f.n));
      Q qn(1);
      for (int i = 0; i < f.n; ++i) qn *= f.form(a);
      if (!c && !qn.is_zero()) c = top / qn;
      if (!c) continue;
      bad += !(top == *c * qn);
    }
    ok = ok && c && bad == 0;
    detail += f.name + " c = " + (c ? c->to_string() : std::string("?")) + ", " + std::to_string(bad) + " failures; ";
  }
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "structure theorem on the (5,2) model", 10, structure_small},
      {2, "structure theorem on K3", 60, structure_k3},
      {3, "HL iff non-isotropic", 0, hl_iff_nonisotropic},
      {4, "dual Lefschetz commutativity", 0, commutativity},
      {5, "Weil operator", 0, weil},
      {6, "so(4,1) and so(4)", 0, so41_so4},
      {7, "Verbitsky component", 0, verbitsky},
      {8, "weak P = W", 10, p_equals_w},
      {9, "isotropic-class independence", 0, independence},
      {10, "Clifford suite", 0, clifford_suite},
      {11, "weight-filtration oracle", 0, weight_oracle},
      {12, "Fujiki relation", 0, fujiki},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    failed += !o.ok;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
