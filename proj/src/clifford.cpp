#include "llv/clifford.hpp"

#include <bit>

namespace llv {

namespace {

// sign of moving the generators of t past those of s: pairs (i in s, j in t) with i > j
int swap_sign(std::uint32_t s, std::uint32_t t) {
  int n = 0;
  for (std::uint32_t r = t; r != 0; r &= r - 1) n += std::popcount(s >> (std::countr_zero(r) + 1));
  return n % 2 == 0 ? 1 : -1;
}

int reversal_sign(std::uint32_t s) {
  const int k = std::popcount(s);
  return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

int parity_sign(std::uint32_t s) { return std::popcount(s) % 2 == 0 ? 1 : -1; }

const CliffordAlgebra& same_algebra(const CliffordElement& x, const CliffordElement& y) {
  if (!x.algebra || x.algebra != y.algebra) throw ValidationError("Clifford elements from different algebras");
  return *x.algebra;
}

CliffordElement with_signs(const CliffordElement& x, int (*sign)(std::uint32_t)) {
  CliffordElement r = x;
  for (std::size_t s = 0; s < r.coeffs.size(); ++s)
    if (sign(static_cast<std::uint32_t>(s)) < 0) r.coeffs[s] = -r.coeffs[s];
  return r;
}

int conj_sign(std::uint32_t s) { return reversal_sign(s) * parity_sign(s); }

// Tr(x conj(e_t)) for x = sum x_s e_s: only s = t reaches the unit
Rational trace_against_conj(const CliffordAlgebra& c, const Vec<Rational>& x, std::uint32_t t) {
  if (x[t].is_zero()) return Rational(0);
  Rational f = c.blade_factor(t, t);
  return conj_sign(t) > 0 ? x[t] * f : -(x[t] * f);
}

Vec<Rational> blade_times(const CliffordAlgebra& c, std::uint32_t s, const Vec<Rational>& a) {
  Vec<Rational> out(c.dim());
  for (std::size_t t = 0; t < a.size(); ++t)
    if (!a[t].is_zero()) out[s ^ t] += c.blade_factor(s, static_cast<std::uint32_t>(t)) * a[t];
  return out;
}

template <bool Parallel>
Matrix<Rational> gram_impl(const CliffordAlgebra& c, const CliffordElement& a) {
  if (a.algebra.get() != &c) throw ValidationError("Clifford element from a different algebra");
  const long n = static_cast<long>(c.dim());
  Matrix<Rational> g(n, n);
  auto row = [&](long s) {
    Vec<Rational> b = blade_times(c, static_cast<std::uint32_t>(s), a.coeffs);
    for (long t = 0; t < n; ++t) g(s, t) = trace_against_conj(c, b, static_cast<std::uint32_t>(t));
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < n; ++s) row(s);
  } else {
    for (long s = 0; s < n; ++s) row(s);
  }
  return g;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(Token, const QuadraticForm& q) : m_(static_cast<int>(q.dim())), q_(q) {
  if (m_ > 20) throw DimensionError("Clifford algebra on more than 20 generators");
  auto dz = congruence_diagonalize(q.gram());
  for (const auto& x : dz.diag)
    if (x.is_zero()) throw ValidationError("Clifford algebra of a degenerate form");
  d_ = dz.diag;
  basis_ = dz.basis;
  auto inv = inverse(basis_.transpose());
  if (!inv) throw MathError("congruence basis is singular");
  to_orth_ = *inv;
}

CliffordElement CliffordAlgebra::zero() const { return {shared_from_this(), Vec<Rational>(dim())}; }

CliffordElement CliffordAlgebra::one() const { return blade(0); }

CliffordElement CliffordAlgebra::blade(std::uint32_t mask, const Rational& c) const {
  if (mask >= dim()) throw DimensionError("blade index out of range");
  CliffordElement e = zero();
  e.coeffs[mask] = c;
  return e;
}

CliffordElement CliffordAlgebra::vector(const Vec<Rational>& v) const {
  if (v.size() != static_cast<std::size_t>(m_)) throw DimensionError("vector length differs from the quadratic space");
  Vec<Rational> c = to_orth_ * v;
  CliffordElement e = zero();
  for (int i = 0; i < m_; ++i) e.coeffs[std::size_t{1} << i] = c[i];
  return e;
}

std::string CliffordAlgebra::label(std::uint32_t mask) const {
  if (mask == 0) return "1";
  std::string s;
  for (int i = 0; i < m_; ++i)
    if (mask >> i & 1) s += "f" + std::to_string(i + 1);
  return s;
}

Rational CliffordAlgebra::blade_factor(std::uint32_t s, std::uint32_t t) const {
  Rational f(swap_sign(s, t));
  for (std::uint32_t r = s & t; r != 0; r &= r - 1) f *= d_[std::countr_zero(r)];
  return f;
}

std::shared_ptr<const CliffordAlgebra> clifford(const QuadraticForm& q) {
  return std::make_shared<const CliffordAlgebra>(CliffordAlgebra::Token{}, q);
}

CliffordElement cl_multiply(const CliffordElement& x, const CliffordElement& y) {
  const CliffordAlgebra& c = same_algebra(x, y);
  CliffordElement z = c.zero();
  for (std::size_t s = 0; s < x.coeffs.size(); ++s) {
    if (x.coeffs[s].is_zero()) continue;
    for (std::size_t t = 0; t < y.coeffs.size(); ++t) {
      if (y.coeffs[t].is_zero()) continue;
      z.coeffs[s ^ t] += c.blade_factor(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)) * x.coeffs[s] * y.coeffs[t];
    }
  }
  return z;
}

CliffordElement cl_add(const CliffordElement& x, const CliffordElement& y) {
  same_algebra(x, y);
  return {x.algebra, x.coeffs + y.coeffs};
}

CliffordElement cl_scale(const Rational& c, const CliffordElement& x) { return {x.algebra, scale(c, x.coeffs)}; }

CliffordElement parity(const CliffordElement& x) { return with_signs(x, parity_sign); }

CliffordElement reversal(const CliffordElement& x) { return with_signs(x, reversal_sign); }

CliffordElement conjugate(const CliffordElement& x) { return with_signs(x, conj_sign); }

Rational cl_trace(const CliffordElement& x) { return x.coeffs.empty() ? Rational(0) : x.coeffs[0]; }

bool operator==(const CliffordElement& x, const CliffordElement& y) {
  return x.algebra == y.algebra && x.coeffs == y.coeffs;
}

CliffordElement complex_structure(const CliffordAlgebra& c, const Vec<Rational>& gamma, const Vec<Rational>& gamma_p) {
  const QuadraticForm& q = c.form();
  if (!q.pair(gamma, gamma_p).is_zero()) throw ValidationError("complex_structure: classes are not orthogonal");
  const Rational a = q(gamma), b = q(gamma_p);
  if (a.sign() <= 0 || b.sign() <= 0) throw ValidationError("complex_structure: classes must be positive");
  auto r = (a * b).sqrt_exact();
  if (!r) throw MathError("requires admissible pair: q(gamma) q(gamma') = " + (a * b).to_string() + " is not a square");
  return cl_scale(Rational(1) / *r, cl_multiply(c.vector(gamma), c.vector(gamma_p)));
}

Matrix<Rational> polarization_gram(const CliffordAlgebra& c, const CliffordElement& a) { return gram_impl<true>(c, a); }

Matrix<Rational> polarization_gram_serial(const CliffordAlgebra& c, const CliffordElement& a) {
  return gram_impl<false>(c, a);
}

Matrix<Rational> left_multiplication(const CliffordElement& x) {
  const CliffordAlgebra& c = *x.algebra;
  const std::size_t n = c.dim();
  Matrix<Rational> m(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (x.coeffs[s].is_zero()) continue;
    for (std::size_t t = 0; t < n; ++t)
      m(s ^ t, t) += c.blade_factor(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)) * x.coeffs[s];
  }
  return m;
}

PolarizationReport polarization_form(const CliffordAlgebra& c, const CliffordElement& a) {
  if (c.generators() > 10) throw DimensionError("polarization_form: more than 10 generators");
  PolarizationReport r;
  r.gram = polarization_gram(c, a);
  const Matrix<Rational> gt = r.gram.transpose();
  r.symmetric = gt == r.gram;
  r.antisymmetric = gt == -r.gram;
  r.probe = r.gram * left_multiplication(a);
  if (r.probe.transpose() == r.probe) {
    r.probe_signature = symmetric_signature(r.probe);
    const int n = static_cast<int>(c.dim());
    r.plus_passes = r.probe_signature.pos == n;
    r.minus_passes = r.probe_signature.neg == n;
  }
  return r;
}

}  // namespace llv
