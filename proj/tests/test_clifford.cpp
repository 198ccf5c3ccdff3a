#include <algorithm>
#include <random>

#include "doctest.h"
#include "llv/clifford.hpp"

using namespace llv;
using Q = Rational;

namespace {

// product of blades by rewriting generator words: adjacent swaps flip the sign, equal
// neighbours contract to d_i
Vec<Q> word_product(const Vec<Q>& d, const Vec<Q>& x, const Vec<Q>& y) {
  const std::size_t n = x.size();
  Vec<Q> z(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (x[s].is_zero() || y[t].is_zero()) continue;
      std::vector<int> w;
      for (int i = 0; i < 32; ++i)
        if (s >> i & 1) w.push_back(i);
      for (int i = 0; i < 32; ++i)
        if (t >> i & 1) w.push_back(i);
      Q c = x[s] * y[t];
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
          if (w[k] == w[k + 1]) {
            c *= d[w[k]];
            w.erase(w.begin() + k, w.begin() + k + 2);
            changed = true;
            break;
          }
          if (w[k] > w[k + 1]) {
            std::swap(w[k], w[k + 1]);
            c = -c;
            changed = true;
            break;
          }
        }
      }
      std::size_t mask = 0;
      for (int i : w) mask |= std::size_t{1} << i;
      z[mask] += c;
    }
  return z;
}

CliffordElement random_element(const CliffordAlgebra& c, std::mt19937& rng, int density = 3) {
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, density);
  CliffordElement x = c.zero();
  for (auto& v : x.coeffs)
    if (pick(rng) == 0) v = Q(coef(rng));
  return x;
}

}  // namespace

TEST_CASE("small Clifford algebras") {
  auto c1 = clifford(QuadraticForm::parse("diag:7"));
  CHECK(c1->dim() == 2);
  auto e = c1->blade(1);
  CHECK(cl_multiply(e, e) == c1->blade(0, Q(7)));

  auto c2 = clifford(QuadraticForm::parse("diag:1,1"));
  auto e12 = c2->blade(3);
  CHECK(cl_multiply(e12, e12) == c2->blade(0, Q(-1)));
  CHECK(cl_multiply(c2->blade(1), e12) == c2->blade(2));

  CHECK(clifford(QuadraticForm::parse("diag:1,1,1,-1,-1"))->dim() == 32);
  CHECK_THROWS_AS(clifford(QuadraticForm::parse("diag:1,0,1")), ValidationError);
  auto other = clifford(QuadraticForm::parse("diag:1,1"));
  CHECK_THROWS_AS(cl_multiply(c2->one(), other->one()), ValidationError);
}

TEST_CASE("product agrees with word rewriting and is associative") {
  auto c = clifford(QuadraticForm::parse("diag:2,-3,5,1"));
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto x = random_element(*c, rng), y = random_element(*c, rng), z = random_element(*c, rng);
    auto xy = cl_multiply(x, y);
    CHECK(xy.coeffs == word_product(c->diagonal(), x.coeffs, y.coeffs));
    CHECK(cl_multiply(xy, z) == cl_multiply(x, cl_multiply(y, z)));
    CHECK(cl_multiply(c->one(), x) == x);
    CHECK(cl_multiply(x, c->one()) == x);
  }
}

TEST_CASE("defining relation in the input basis") {
  auto q = QuadraticForm::parse("gram:2,1,0,0;1,3,1,0;0,1,-1,2;0,0,2,1");
  auto c = clifford(q);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int k = 0; k < 100; ++k) {
    Vec<Q> v(4);
    for (auto& x : v) x = Q(d(rng));
    auto cv = c->vector(v);
    CHECK(cl_multiply(cv, cv) == c->blade(0, q(v)));
  }
  // anticommutation of orthogonal vectors, generators anticommute up to the form
  Vec<Q> a{Q(1), Q(0), Q(0), Q(0)}, b{Q(0), Q(1), Q(0), Q(0)};
  auto ab = cl_multiply(c->vector(a), c->vector(b));
  auto ba = cl_multiply(c->vector(b), c->vector(a));
  CHECK(cl_add(ab, ba) == c->blade(0, Q(2) * q.pair(a, b)));
}

TEST_CASE("involutions") {
  auto c = clifford(QuadraticForm::parse("diag:1,1,-1"));
  CHECK(conjugate(c->one()) == c->one());
  CHECK(conjugate(c->blade(1)) == c->blade(1, Q(-1)));
  CHECK(conjugate(c->blade(3)) == c->blade(3, Q(-1)));
  CHECK(conjugate(c->blade(7)) == c->blade(7));
  std::mt19937 rng(2);
  for (int k = 0; k < 50; ++k) {
    auto x = random_element(*c, rng, 1), y = random_element(*c, rng, 1);
    CHECK(conjugate(conjugate(x)) == x);
    CHECK(conjugate(cl_multiply(x, y)) == cl_multiply(conjugate(y), conjugate(x)));
    CHECK(reversal(cl_multiply(x, y)) == cl_multiply(reversal(y), reversal(x)));
    CHECK(parity(cl_multiply(x, y)) == cl_multiply(parity(x), parity(y)));
  }
}

TEST_CASE("trace") {
  auto c = clifford(QuadraticForm::parse("diag:3,-1,2"));
  CHECK(cl_trace(c->one()) == Q(1));
  CHECK(cl_trace(c->blade(1)).is_zero());
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    auto x = random_element(*c, rng, 1), y = random_element(*c, rng, 1);
    // regular representation trace from the word oracle
    Q tr;
    for (std::size_t t = 0; t < c->dim(); ++t) tr += word_product(c->diagonal(), x.coeffs, c->blade(t).coeffs)[t];
    CHECK(cl_trace(x) == tr / Q(static_cast<long>(c->dim())));
    CHECK(cl_trace(cl_multiply(x, y)) == cl_trace(cl_multiply(y, x)));
  }
}

TEST_CASE("complex structure from a positive pair") {
  auto q = QuadraticForm::parse("diag:1,1,1,-1,-1");
  auto c = clifford(q);
  Vec<Q> g1{Q(1), Q(0), Q(0), Q(0), Q(0)}, g2{Q(0), Q(1), Q(0), Q(0), Q(0)};
  auto mu = complex_structure(*c, g1, g2);
  CHECK(mu == c->blade(3));
  CHECK(cl_multiply(mu, mu) == c->blade(0, Q(-1)));
  CHECK(complex_structure(*c, scale(Q(2), g1), scale(Q(2), g2)) == mu);
  CHECK_THROWS_AS(complex_structure(*c, g1, g1), ValidationError);
  for (std::size_t i = 2; i < 5; ++i) {
    Vec<Q> v(5);
    v[i] = Q(1);
    auto cv = c->vector(v);
    CHECK(cl_multiply(mu, cv) == cl_multiply(cv, mu));
  }

  auto q2 = QuadraticForm::parse("diag:2,3,-1");
  auto c2 = clifford(q2);
  Vec<Q> a{Q(1), Q(0), Q(0)}, b{Q(0), Q(1), Q(0)};
  CHECK_THROWS_WITH_AS(complex_structure(*c2, a, b), doctest::Contains("admissible"), MathError);
  auto c3 = clifford(QuadraticForm::parse("diag:2,8,-1"));
  auto mu3 = complex_structure(*c3, a, b);
  CHECK(cl_multiply(mu3, mu3) == c3->blade(0, Q(-1)));
}

TEST_CASE("polarization form") {
  std::mt19937 rng(4);
  for (const char* spec : {"diag:1,1", "diag:1,1,-1", "diag:2,3,-1,-5", "gram:2,1,0;1,2,0;0,0,-3"}) {
    INFO(spec);
    auto q = QuadraticForm::parse(spec);
    auto c = clifford(q);
    const std::size_t m = q.dim();
    Vec<Q> a1(m), a2(m);
    a1[0] = Q(1);
    a2[1] = Q(1);
    // make the second class orthogonal to the first
    a2 = a2 - scale(q.pair(a1, a2) / q(a1), a1);
    auto a = cl_multiply(c->vector(a1), c->vector(a2));
    auto rep = polarization_form(*c, a);
    CHECK(rep.gram == polarization_gram_serial(*c, a));
    CHECK(rep.antisymmetric);
    CHECK(rep.plus_passes != rep.minus_passes);
    for (int k = 0; k < 100; ++k) {
      auto x = random_element(*c, rng, 1), y = random_element(*c, rng, 1);
      Q direct = cl_trace(cl_multiply(cl_multiply(x, a), conjugate(y)));
      CHECK(direct == bilinear(rep.gram, x.coeffs, y.coeffs));
    }
  }
  // definite signature: the probe is indefinite for both signs
  auto c = clifford(QuadraticForm::parse("diag:1,1,1"));
  auto rep = polarization_form(*c, c->blade(3));
  CHECK_FALSE(rep.plus_passes);
  CHECK_FALSE(rep.minus_passes);
  auto big = clifford(QuadraticForm::diagonal(Vec<Q>(11, Q(1))));
  CHECK_THROWS_AS(polarization_form(*big, big->blade(3)), DimensionError);
}
