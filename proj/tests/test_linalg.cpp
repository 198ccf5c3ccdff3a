#include <random>

#include "doctest.h"
#include "llv/quadratic.hpp"
#include "llv/spectrum.hpp"
#include "llv/subspace.hpp"

using namespace llv;
using Q = Rational;

namespace {

Matrix<Q> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Q> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Q(d(rng));
  return m;
}

// characteristic polynomial by Faddeev-LeVerrier; coefficients of x^n, x^{n-1}, ..., x^0
std::vector<Q> charpoly(const Matrix<Q>& a) {
  std::size_t n = a.rows();
  std::vector<Q> c(n + 1);
  c[0] = Q(1);
  Matrix<Q> m = Matrix<Q>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Q> am = a * m;
    c[k] = -trace(am) / Q(static_cast<long long>(k));
    m = am + Matrix<Q>::identity(n) * c[k];
  }
  return c;
}

// Descartes' rule is exact for real-rooted polynomials (symmetric matrices).
Signature signature_oracle(const Matrix<Q>& a) {
  auto c = charpoly(a);
  std::size_t n = a.rows();
  std::size_t zeros = 0;
  while (zeros < n && c[n - zeros].is_zero()) ++zeros;
  auto changes = [](std::vector<Q> p) {
    int ch = 0, last = 0;
    for (const auto& x : p) {
      int s = x.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++ch;
      last = s;
    }
    return ch;
  };
  std::vector<Q> trimmed(c.begin(), c.end() - zeros);
  std::vector<Q> neg = trimmed;
  for (std::size_t i = 0; i < neg.size(); ++i)
    if ((trimmed.size() - 1 - i) % 2 == 1) neg[i] = -neg[i];
  return {changes(trimmed), changes(neg), static_cast<int>(zeros)};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
  CHECK(Q(-4, -6) == Q(2, 3));
  CHECK(Q::parse(" -7/21 ") == Q(-1, 3));
  CHECK_THROWS_AS(Q::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Q::parse("1e3"), ParseError);
  CHECK_THROWS_AS(Q::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Q(1) / Q(0), MathError);
  CHECK(Q(4, 9).sqrt_exact() == Q(2, 3));
  CHECK_FALSE(Q(2).sqrt_exact().has_value());
  CHECK(Q(1, 2) < Q(2, 3));
}

TEST_CASE("rational overflow promotes to big integers and demotes back") {
  Q big(1);
  Q base(1LL << 40);
  for (int i = 0; i < 4; ++i) big *= base;
  CHECK(big.to_string() == "1461501637330902918203684832716283019655932542976");
  for (int i = 0; i < 4; ++i) big /= base;
  CHECK(big == Q(1));
  CHECK(big.is_one());
  Q m(std::numeric_limits<long long>::min());
  CHECK(m + Q(1) == Q(std::numeric_limits<long long>::min() + 1));
  CHECK(-m > Q(std::numeric_limits<long long>::max()));
}

TEST_CASE("gaussian rationals") {
  Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  CHECK(conj(i) == -i);
  CHECK(conj(Q(3)) == Q(3));
  Gaussian z(Q(1), Q(2));
  CHECK(z / z == Gaussian(1));
  CHECK(z * conj(z) == Gaussian(5));
  CHECK(Gaussian::parse("1/2-3 i") == Gaussian(Q(1, 2), Q(-3)));
  CHECK(Gaussian::parse("-i") == Gaussian(Q(0), Q(-1)));
  CHECK(Gaussian::parse("2") == Gaussian(2));
  CHECK(Gaussian::parse(Gaussian(Q(-1, 3), Q(5, 7)).to_string()) == Gaussian(Q(-1, 3), Q(5, 7)));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix<Q>(2, 2)).dim() == 2);
  CHECK(kernel(Matrix<Q>::identity(3)).dim() == 0);
  Matrix<Q> nil{{Q(0), Q(1)}, {Q(0), Q(0)}};
  auto k = kernel(nil);
  CHECK(k == Subspace<Q>::span(std::vector<Vec<Q>>{{Q(1), Q(0)}}, 2));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix<Q> m = random_matrix(rng, r, c, -1, 1);
    auto k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (const auto& v : k.vectors()) CHECK(is_zero_vec(m * v));
  }
}

TEST_CASE("subspace operations") {
  Vec<Q> e1{Q(1), Q(0)}, e2{Q(0), Q(1)};
  auto a = Subspace<Q>::span({e1}, 2), b = Subspace<Q>::span({e2}, 2);
  CHECK(intersect(a, b).dim() == 0);
  CHECK((a + b) == Subspace<Q>::full(2));
  CHECK(intersect(a, a) == a);
  CHECK((a + a) == a);
  CHECK_THROWS_AS(intersect(a, Subspace<Q>::full(3)), DimensionError);

  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto x = Subspace<Q>::span(random_matrix(rng, 3, 4, -2, 2));
    auto y = Subspace<Q>::span(random_matrix(rng, 2, 4, -2, 2));
    auto cap = intersect(x, y);
    auto sum = x + y;
    CHECK(cap.dim() + sum.dim() == x.dim() + y.dim());
    for (const auto& v : cap.vectors()) {
      CHECK(x.contains(v));
      CHECK(y.contains(v));
    }
    CHECK(sum.contains(x));
    CHECK(sum.contains(y));
  }
}

TEST_CASE("subspace equality does not depend on the spanning set") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix<Q> m = random_matrix(rng, 3, 5);
    Matrix<Q> p = random_matrix(rng, 3, 3);
    if (rank(p) < 3) continue;
    CHECK(Subspace<Q>::span(m) == Subspace<Q>::span(p * m));
  }
}

TEST_CASE("symmetric signature examples") {
  CHECK(symmetric_signature(Matrix<Q>::diagonal({Q(1), Q(1), Q(1), Q(-1), Q(-1)})) == Signature{3, 2, 0});
  CHECK(symmetric_signature(Matrix<Q>(2, 2)) == Signature{0, 0, 2});
  CHECK(symmetric_signature(Matrix<Q>{{Q(0), Q(1)}, {Q(1), Q(0)}}) == Signature{1, 1, 0});
  CHECK_THROWS_AS(symmetric_signature(Matrix<Q>{{Q(0), Q(1)}, {Q(2), Q(0)}}), ValidationError);
}

TEST_CASE("signature agrees with the Descartes oracle and is congruence invariant") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 6;
    Matrix<Q> a = random_matrix(rng, n, n, -2, 2);
    Matrix<Q> s = a + a.transpose();
    if (t % 3 == 0) s = a * a.transpose() - Matrix<Q>::identity(n);  // sometimes singular-ish
    auto sig = symmetric_signature(s);
    CHECK(sig == signature_oracle(s));
    Matrix<Q> p = random_matrix(rng, n, n);
    if (rank(p) < n) continue;
    CHECK(symmetric_signature(p * s * p.transpose()) == sig);
  }
}

TEST_CASE("congruence diagonalization reproduces the form") {
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 5;
    Matrix<Q> a = random_matrix(rng, n, n, -2, 2);
    Matrix<Q> s = a + a.transpose();
    auto d = congruence_diagonalize(s);
    CHECK(d.basis * s * d.basis.transpose() == Matrix<Q>::diagonal(d.diag));
    CHECK(rank(d.basis) == n);
  }
}

TEST_CASE("isotropic vectors and positive pairs") {
  auto q = QuadraticForm::parse("diag:1,1,1,-1,-1");
  auto v = find_isotropic(q);
  CHECK(q(v).is_zero());
  CHECK_FALSE(is_zero_vec(v));
  CHECK_THROWS_AS(find_isotropic(QuadraticForm::parse("diag:1,2,3")), MathError);

  auto q2 = QuadraticForm::parse("diag:1,2,3,-5,-7");
  auto w = find_isotropic(q2);
  CHECK(q2(w).is_zero());
  auto pp = find_positive_pair(q2);
  REQUIRE(pp.has_value());
  CHECK(q2(pp->u) == q2(pp->v));
  CHECK(q2.pair(pp->u, pp->v).is_zero());
  CHECK(q2(pp->u).sign() > 0);

  auto h = QuadraticForm::parse("gram:0,1;1,0");
  CHECK(h.signature() == Signature{1, 1, 0});
  CHECK_THROWS_AS(QuadraticForm::parse("gram:0,1;2,0"), ValidationError);
  CHECK_THROWS_AS(QuadraticForm::parse("diag:1,x"), ParseError);
}

TEST_CASE("integer eigenspaces") {
  auto es = integer_eigenspaces(Matrix<Q>::diagonal({Q(-2), Q(0), Q(2)}), {-2, 0, 2});
  CHECK(es.size() == 3);
  for (const auto& [lam, s] : es) CHECK(s.dim() == 1);
  CHECK(integer_eigenspaces(Matrix<Q>::identity(4), {1}).at(1).dim() == 4);
  Matrix<Q> jordan{{Q(1), Q(1)}, {Q(0), Q(1)}};
  CHECK_THROWS_AS(integer_eigenspaces(jordan, {1}), MathError);
  CHECK_THROWS_AS(integer_eigenspaces(Matrix<Q>::identity(2), {0, 2}), MathError);
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix<Q> a = random_matrix(rng, 4, 4);
    auto inv = inverse(a);
    if (!inv) {
      CHECK(rank(a) < 4);
      continue;
    }
    CHECK(a * *inv == Matrix<Q>::identity(4));
    Vec<Q> b{Q(1), Q(-2), Q(3), Q(0)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
  Matrix<Q> sing{{Q(1), Q(1)}, {Q(1), Q(1)}};
  CHECK_FALSE(solve(sing, Vec<Q>{Q(1), Q(2)}).has_value());
}
