#include <random>

#include "doctest.h"
#include "llv/bbf.hpp"
#include "llv/fixtures.hpp"
#include "llv/llv_ops.hpp"

using namespace llv;
using Q = Rational;

namespace {

const BogomolovModel& model52() {
  static const BogomolovModel m = bogomolov_model(QuadraticForm::parse("diag:1,1,1,-1,-1"), 2);
  return m;
}

Vec<Q> e(std::size_t m, std::size_t i) {
  Vec<Q> v(m);
  v[i] = Q(1);
  return v;
}

std::optional<Q> ratio(const Matrix<Q>& g, const Matrix<Q>& h) {
  std::optional<Q> c;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (h(i, j).is_zero()) {
        if (!g(i, j).is_zero()) return std::nullopt;
        continue;
      }
      Q r = g(i, j) / h(i, j);
      if (c && !(*c == r)) return std::nullopt;
      c = r;
    }
  return c;
}

// degree-2 block of an operator
Matrix<Q> block2(const GradedAlgebra<Q>& r, const Matrix<Q>& d) {
  const std::size_t o = r.offset(2), m = r.dim(2);
  Matrix<Q> b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = d(o + i, o + j);
  return b;
}

}  // namespace

TEST_CASE("closure of a single sl2 triple") {
  auto t = complete_sl2(model52().ring, model52().ring.embed(2, e(5, 0)));
  auto g = lie_closure(std::vector<Matrix<Q>>{t.L, t.Lam});
  CHECK(g.dim() == 3);
  CHECK(g.contains(t.H));
  CHECK(is_bracket_closed(g));
  auto gr = ad_grading(g, t.H);
  CHECK(gr.g2.size() == 1);
  CHECK(gr.g0.size() == 1);
  CHECK(gr.gm2.size() == 1);
  auto rep = so_identify(g, 5);
  CHECK_FALSE(rep.pass);
  CHECK(rep.dim == 3);
}

TEST_CASE("total Lie algebra of a Bogomolov model with b2 = 5") {
  const auto& bm = model52();
  auto gens = llv_generators(bm.ring);
  CHECK(gens.classes.size() == 5);
  auto g = lie_closure(gens.matrices);
  CHECK(g.dim() == 21);
  CHECK(is_bracket_closed(g));

  SUBCASE("parallel and serial closures agree") {
    auto s = lie_closure_serial(gens.matrices);
    REQUIRE(s.dim() == g.dim());
    CHECK(s.basis() == g.basis());
  }
  SUBCASE("closure is idempotent") {
    auto again = lie_closure(g.basis());
    CHECK(again.basis() == g.basis());
  }
  SUBCASE("grading by H") {
    auto gr = ad_grading(g, gens.triples[0].H);
    CHECK(gr.g2.size() == 5);
    CHECK(gr.g0.size() == 11);
    CHECK(gr.gm2.size() == 5);
  }
  SUBCASE("signature") {
    auto rep = so_identify(g, 5);
    CHECK(rep.exact_killing);
    CHECK(rep.compact == 9);
    CHECK(rep.noncompact == 12);
    CHECK(rep.pass);
    auto forced = so_identify(g, 5, Signature{3, 2, 0}, 0);
    CHECK_FALSE(forced.exact_killing);
    CHECK(forced.ratio_checks > 0);
    CHECK(forced.pass);
    CHECK(forced.compact == rep.compact);
    auto c = ratio(killing_form(g), trace_form(g));
    REQUIRE(c.has_value());
    CHECK(c->sign() > 0);
    CHECK(*c == forced.ratio);
  }
  SUBCASE("wrong signature is rejected") {
    CHECK_FALSE(so_identify(g, 5, Signature{1, 4, 0}).pass);
  }
}

TEST_CASE("total Lie algebra of the K3 ring") {
  auto r = k3_ring(k3_form());
  auto gens = llv_generators(r);
  auto g = lie_closure(gens.matrices);
  CHECK(g.dim() == 276);
  auto gr = ad_grading(g, gens.triples[0].H);
  CHECK(gr.g2.size() == 22);
  CHECK(gr.g0.size() == 232);
  CHECK(gr.gm2.size() == 22);
  auto rep = so_identify(g, 22);
  CHECK_FALSE(rep.exact_killing);
  CHECK(rep.ratio == Q(22));
  CHECK(rep.compact == 196);
  CHECK(rep.noncompact == 80);
  CHECK(rep.pass);
}

TEST_CASE("ad grading rejects an element outside the algebra") {
  auto t = complete_sl2(model52().ring, model52().ring.embed(2, e(5, 0)));
  auto g = lie_closure(std::vector<Matrix<Q>>{t.L, t.Lam});
  auto other = complete_sl2(model52().ring, model52().ring.embed(2, e(5, 1)));
  CHECK_THROWS_AS(ad_grading(g, other.L), ValidationError);
}

TEST_CASE("dual Lefschetz operators commute") {
  const auto& bm = model52();
  const auto& r = bm.ring;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  int pairs = 0;
  while (pairs < 50) {
    Vec<Q> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = Q(d(rng));
      b[i] = Q(d(rng));
    }
    if (bm.q0(a).is_zero() || bm.q0(b).is_zero()) continue;
    CHECK(dual_lefschetz_commute(r, r.embed(2, a), r.embed(2, b)));
    ++pairs;
  }
  CHECK(dual_lefschetz_commute(r, r.embed(2, scale(Q(2), bm.u)), r.embed(2, scale(Q(2), bm.v))));
  CHECK_THROWS_AS(dual_lefschetz_commute(r, r.embed(2, e(5, 0) + e(5, 3)), r.embed(2, e(5, 1))), MathError);
}

TEST_CASE("Weil operator") {
  const auto& bm = model52();
  auto w = weil_operator(bm.hodge);
  CHECK(w.ok);
  const auto& b = bm.hodge;
  Vec<Gaussian> s(b.sigma.begin(), b.sigma.end());
  CHECK(w.C * s == scale(Gaussian(Q(0), Q(2)), s));
  auto t = torus_bigraded(2);
  CHECK(weil_operator(t).ok);
}

TEST_CASE("derivations") {
  const auto& bm = model52();
  const auto& r = bm.ring;
  auto ta = complete_sl2(r, r.embed(2, e(5, 0)));
  auto tb = complete_sl2(r, r.embed(2, e(5, 1)));
  auto tc = complete_sl2(r, r.embed(2, e(5, 3)));

  CHECK(derivation_check(commutator(ta.L, tb.Lam), r).ok);
  CHECK(derivation_check(commutator(ta.L, tc.Lam), r).ok);
  auto bad = derivation_check(ta.L, r);
  CHECK_FALSE(bad.ok);
  CHECK(bad.reason == "operator does not preserve degree");
  auto h = derivation_check(ta.H, r);
  CHECK_FALSE(h.ok);
  CHECK(h.witness.has_value());

  auto gens = llv_generators(r);
  auto g = lie_closure(gens.matrices);
  auto gr = ad_grading(g, gens.triples[0].H);
  const Matrix<Q> q = bbf_form(bm).gram();
  int checked = 0;
  for (std::size_t i = 0; i < gr.g0.size(); ++i)
    for (std::size_t j = i + 1; j < gr.g0.size(); ++j) {
      Matrix<Q> d = commutator(gr.g0[i], gr.g0[j]);
      if (d.is_zero()) continue;
      CHECK(derivation_check(d, r).ok);
      Matrix<Q> d2 = block2(r, d);
      CHECK((d2.transpose() * q + q * d2).is_zero());
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("so(4,1) from a positive orthogonal triple") {
  const auto& bm = model52();
  std::vector<Vec<Q>> w{scale(Q(2), bm.u), scale(Q(2), bm.v), e(5, 2)};
  // u and v must be orthogonal to e3 for this triple to be admissible
  REQUIRE(bm.q0.pair(w[0], w[2]).is_zero());
  REQUIRE(bm.q0.pair(w[1], w[2]).is_zero());
  auto res = so41_subalgebra(bm.ring, bm.q0, w);
  CHECK(res.dim == 10);
  CHECK(res.skipped.empty());
  REQUIRE(res.relations.size() == 8);
  for (const auto& rc : res.relations) {
    INFO(rc.name);
    CHECK(rc.holds);
  }

  auto q = QuadraticForm::parse("diag:1,2,3,-5,-7");
  auto bm2 = bogomolov_model(q, 2);
  auto skipped = so41_subalgebra(bm2.ring, q, {e(5, 0), e(5, 1), e(5, 2)});
  CHECK(skipped.dim == 10);
  CHECK_FALSE(skipped.skipped.empty());
  CHECK(skipped.relations.empty());

  CHECK_THROWS_AS(so41_subalgebra(bm.ring, bm.q0, {e(5, 0), e(5, 1), e(5, 3)}), ValidationError);
  CHECK_THROWS_AS(so41_subalgebra(bm.ring, bm.q0, {e(5, 0), e(5, 0) + e(5, 1), e(5, 2)}), ValidationError);
}

TEST_CASE("so(4) from the symplectic triples") {
  for (const auto& b : {model52().hodge, torus_bigraded(2)}) {
    auto res = so4_symplectic(b);
    CHECK(res.span_rank == 6);
    CHECK(res.closure_dim == 6);
    CHECK(res.triples_ok);
    CHECK(res.commuting);
    CHECK(res.weil_in_span);
  }
}

TEST_CASE("Verbitsky component") {
  struct Case {
    const char* q;
    int n;
  };
  for (auto cs : {Case{"diag:1,1,1,-1,-1", 2}, Case{"diag:1,1,1,-1,-1,-1", 2}, Case{"diag:1,1,1,-1,-1", 3}}) {
    auto bm = bogomolov_model(QuadraticForm::parse(cs.q), cs.n);
    auto cls = hl_spanning_classes(bm.ring);
    auto v = verbitsky_component(bm.ring, {cls[0], cls[2]});
    CHECK(v.dims_match);
    CHECK(v.lambda_stable);
    CHECK(v.identity_holds);
  }
  auto v = verbitsky_component(model52().ring, {hl_spanning_classes(model52().ring)[0]});
  CHECK(v.dims == std::vector<int>{1, 5, 15, 5, 1});

  auto k3 = k3_ring(k3_form());
  auto kv = verbitsky_component(k3, {hl_spanning_classes(k3)[1]});
  CHECK(kv.dims == std::vector<int>{1, 22, 1});
  CHECK(kv.identity_holds);
}

TEST_CASE("HL spanning classes span degree 2") {
  auto k3 = k3_ring(k3_form());
  auto cls = hl_spanning_classes(k3);
  std::vector<Vec<Q>> deg2;
  for (const auto& c : cls) {
    CHECK(hl_test(k3, c));
    deg2.push_back(k3.component(c, 2));
  }
  CHECK(Subspace<Q>::span(deg2, 22).dim() == 22);
}
