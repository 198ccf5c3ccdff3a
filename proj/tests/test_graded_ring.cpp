#include <random>

#include "doctest.h"
#include "llv/fixtures.hpp"

using namespace llv;
using Q = Rational;

namespace {

std::vector<int> even_dims(const GradedAlgebra<Q>& r) {
  std::vector<int> d;
  for (int k = 0; k <= r.top_degree(); k += 2) d.push_back(r.dim(k));
  return d;
}

long binom(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// predicted Verbitsky dims: Sym^k for k <= n, Sym^{2n-k} above
std::vector<int> predicted(int m, int n) {
  std::vector<int> d;
  for (int k = 0; k <= 2 * n; ++k) d.push_back(static_cast<int>(binom(m - 1 + (k <= n ? k : 2 * n - k), m - 1)));
  return d;
}

Vec<Q> random_isotropic(std::mt19937& rng, const QuadraticForm& q, const Vec<Q>& e) {
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    Vec<Q> v(q.dim());
    for (auto& x : v) x = Q(d(rng));
    Q ve = q.pair(v, e);
    if (ve.is_zero()) continue;
    return v - scale(q(v) / (Q(2) * ve), e);
  }
}

}  // namespace

TEST_CASE("pairing ring of the K3 lattice") {
  auto r = k3_ring(k3_form());
  CHECK(validate(r).ok);
  CHECK(r.size() == 24);
  // e = a1 + a4, f = a1 - a4 is a hyperbolic pair up to scale: q(e,f) = 1 - (-1)(-1) ... = 2
  Vec<Q> e = r.zero(), f = r.zero();
  e[1] = Q(1);
  e[4] = Q(1);
  f[1] = Q(1);
  f[4] = Q(-1);
  Vec<Q> ef = r.multiply(e, f);
  CHECK(r.integrate(ef) == Q(2));
  CHECK(r.is_homogeneous(ef, 4));
  CHECK(r.multiply(r.one(), e) == e);
  CHECK_THROWS_AS(k3_ring(QuadraticForm::diagonal({Q(1), Q(0)})), ValidationError);
}

TEST_CASE("validate reports broken rings") {
  auto r = k3_ring(k3_form());
  auto zeroed = r;
  zeroed.set_integration({Q(0)});
  auto rep = validate(zeroed);
  CHECK_FALSE(rep.ok);
  bool saw = false;
  for (const auto& s : rep.issues) saw = saw || s.find("duality degenerate") != std::string::npos;
  CHECK(saw);

  auto t = torus_ring(2);
  // perturb x1*x2 so that (x1 x2) x3 no longer matches x1 (x2 x3)
  auto bad = t;
  auto p = bad.product(1, 2);
  p[0].second = Q(2);
  bad.set_product(1, 2, p);
  auto sym = bad.product(2, 1);
  sym[0].second = Q(-2);
  bad.set_product(2, 1, sym);
  auto rep2 = validate(bad);
  CHECK_FALSE(rep2.ok);
  bool assoc = false;
  for (const auto& s : rep2.issues) assoc = assoc || s.find("associativity failure at") != std::string::npos;
  CHECK(assoc);

  auto comm = r;
  comm.set_product(1, 2, {{23, Q(1)}});
  auto rep3 = validate(comm);
  CHECK_FALSE(rep3.ok);
  REQUIRE_FALSE(rep3.issues.empty());
  CHECK(rep3.issues.front().find("graded-commutativity failure at (1,2)") != std::string::npos);
}

TEST_CASE("parallel associativity scan matches the serial reference") {
  auto t = torus_ring(2);
  auto bad = t;
  auto p = bad.product(1, 2);
  p[0].second = Q(3);
  bad.set_product(1, 2, p);
  CHECK(associativity_defects(bad, 1000) == associativity_defects_serial(bad, 1000));
  CHECK(associativity_defects(t, 10).empty());
}

TEST_CASE("torus rings") {
  CHECK(torus_ring(1).dims() == std::vector<int>{1, 2, 1});
  CHECK(torus_ring(2).dims() == std::vector<int>{1, 4, 6, 4, 1});
  auto t = torus_ring(2);
  CHECK(validate(t).ok);
  Vec<Q> x = t.basis_vector(1), y = t.basis_vector(2);
  CHECK(t.multiply(x, y) == scale(Q(-1), t.multiply(y, x)));
  CHECK(is_zero_vec(t.multiply(x, x)));

  auto b = torus_bigraded(2);
  CHECK(validate(b.ring).ok);
  CHECK(validate_bigrading(b).ok);
  CHECK(b.ring.integrate(b.ring.multiply(b.sigma, b.sigma_bar)) == Q(1));
  CHECK_THROWS_AS(torus_bigraded(3), ValidationError);
}

TEST_CASE("bogomolov model b2 = 5, n = 2") {
  auto q = QuadraticForm::parse("diag:1,1,1,-1,-1");
  auto bm = bogomolov_model(q, 2);
  CHECK(even_dims(bm.ring) == std::vector<int>{1, 5, 15, 5, 1});
  CHECK(even_dims(bm.ring) == predicted(5, 2));
  CHECK(validate(bm.ring).ok);
  CHECK(validate(bm.hodge.ring).ok);
  CHECK(validate_bigrading(bm.hodge).ok);
  CHECK(bm.ring.dim(8) == 1);

  // alpha^{n+1} = 0 for random isotropic alpha
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    Vec<Q> a = random_isotropic(rng, q, bm.isotropic);
    CHECK(is_zero_vec(bm.ring.power(bm.ring.embed(2, a), 3)));
  }
  // (s + sb)^{2n} != 0
  const auto& h = bm.hodge;
  CHECK_FALSE(is_zero_vec(h.ring.power(h.sigma + h.sigma_bar, 4)));
  Vec<Q> ss = h.ring.multiply(h.sigma, h.sigma_bar);
  CHECK_FALSE(is_zero_vec(ss));
  for (std::size_t i = 0; i < ss.size(); ++i)
    if (!ss[i].is_zero()) CHECK(h.pq[i] == std::pair<int, int>{2, 2});
  CHECK(h.ring.integrate(h.ring.power(ss, 2)) == Q(1));

  // the conjugation is an involution and fixes real classes
  REQUIRE(h.conjugation.has_value());
  CHECK(*h.conjugation * *h.conjugation == Matrix<Q>::identity(h.ring.size()));
  CHECK(*h.conjugation * h.sigma == h.sigma_bar);
}

TEST_CASE("bogomolov model with n = 1 recovers the pairing ring") {
  auto q = k3_form();
  auto bm = bogomolov_model(q, 1);
  CHECK(even_dims(bm.ring) == std::vector<int>{1, 22, 1});
  CHECK(validate(bm.ring).ok);
  // product on degree 2 is proportional to the pairing
  Q ratio;
  bool consistent = true;
  for (int i = 0; i < 22; ++i)
    for (int j = 0; j < 22; ++j) {
      Q v = bm.ring.integrate(bm.ring.multiply(bm.ring.basis_vector(1 + i), bm.ring.basis_vector(1 + j)));
      Q g = q.gram()(i, j);
      if (g.is_zero()) {
        consistent = consistent && v.is_zero();
        continue;
      }
      if (ratio.is_zero()) ratio = v / g;
      consistent = consistent && v == ratio * g;
    }
  CHECK(consistent);
  CHECK(ratio.sign() > 0);
}

TEST_CASE("bogomolov models match predicted dimensions") {
  struct Case {
    const char* q;
    int n;
  };
  for (auto c : {Case{"diag:1,1,1,-1,-1,-1", 2}, Case{"diag:1,1,1,-1,-1", 3}, Case{"diag:1,2,3,-5,-7", 2}}) {
    auto q = QuadraticForm::parse(c.q);
    auto bm = bogomolov_model(q, c.n);
    CHECK(even_dims(bm.ring) == predicted(static_cast<int>(q.dim()), c.n));
    CHECK(even_dims(bm.hodge.ring) == predicted(static_cast<int>(q.dim()), c.n));
    CHECK(validate(bm.ring).ok);
    CHECK(validate_bigrading(bm.hodge).ok);
  }
}

TEST_CASE("bogomolov model errors") {
  CHECK_THROWS_AS(bogomolov_model(QuadraticForm::parse("diag:1,1,1,1,1"), 2), MathError);
  CHECK_THROWS_AS(bogomolov_model(QuadraticForm::parse("diag:1,1,0,-1,-1"), 2), ValidationError);
  BogomolovOptions tight;
  tight.budget = 3;
  CHECK_THROWS_WITH_AS(bogomolov_model(QuadraticForm::parse("diag:1,1,1,-1,-1"), 2, tight),
                       doctest::Contains("ideal saturation failed"), MathError);
}

TEST_CASE("bogomolov construction is deterministic") {
  auto q = QuadraticForm::parse("diag:1,1,1,-1,-1");
  auto a = bogomolov_model(q, 2), b = bogomolov_model(q, 2);
  CHECK(a.ring == b.ring);
  CHECK(a.hodge.ring == b.hodge.ring);
}
