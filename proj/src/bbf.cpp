#include "llv/bbf.hpp"

#include <random>

namespace llv {

namespace {

template <typename F>
Rational real_rational(const F& x) {
  if (!FieldTraits<F>::is_real(x)) throw MathError("form value on a real class is not real");
  return FieldTraits<F>::real_part(x);
}

Matrix<Rational> real_matrix(const Matrix<Gaussian>& m) {
  return m.map<Rational>([](const Gaussian& x) { return real_rational(x); });
}

}  // namespace

template <typename F>
Matrix<F> bbf_gram(const GradedAlgebra<F>& r, const Vec<F>& sigma, const Vec<F>& sigma_bar, int n) {
  if (n < 1 || r.top_degree() != 4 * n) throw DimensionError("bbf form needs top degree 4n");
  const Vec<F> ss = r.multiply(sigma, sigma_bar);
  const F top = r.integrate(r.power(ss, n));
  if (top.is_zero()) throw MathError("degenerate symplectic top power");
  if (!FieldTraits<F>::is_real(top) || FieldTraits<F>::real_part(top).sign() < 0)
    throw MathError("symplectic top power is not a positive real number");
  auto rho = FieldTraits<F>::real_part(top).root_exact(n);
  if (!rho) throw MathError("normalizing the symplectic class needs a rational " + std::to_string(n) + "-th root of " +
                            top.to_string());
  Rational inv_rho = Rational(1) / *rho;
  Rational k1(1), k2(1);
  for (int i = 0; i < n - 1; ++i) k1 *= inv_rho;
  for (int i = 0; i < 2 * n - 1; ++i) k2 *= inv_rho;

  const int m = r.dim(2);
  const Vec<F> w = r.power(ss, n - 1);
  const Vec<F> a_side = r.multiply(r.power(sigma, n - 1), r.power(sigma_bar, n));
  const Vec<F> b_side = r.multiply(r.power(sigma, n), r.power(sigma_bar, n - 1));
  Vec<F> A(m), B(m);
  std::vector<Vec<F>> wx(m);
  for (int i = 0; i < m; ++i) {
    Vec<F> x = r.basis_vector(r.offset(2) + i);
    A[i] = r.integrate(r.multiply(a_side, x));
    B[i] = r.integrate(r.multiply(b_side, x));
    wx[i] = r.multiply(w, x);
  }
  const F half_n = F(Rational(n, 2) * k1);
  const F cross = F(Rational(1 - n, 2) * k2);
  Matrix<F> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      F v = half_n * r.integrate(r.multiply(wx[i], r.basis_vector(r.offset(2) + j))) +
            cross * (A[i] * B[j] + A[j] * B[i]);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

QuadraticForm bbf_form(const BigradedAlgebra<Rational>& b) {
  return QuadraticForm(bbf_gram(b.ring, b.sigma, b.sigma_bar, b.n));
}

QuadraticForm bbf_form(const GradedAlgebra<Rational>& r) {
  if (r.top_degree() != 4) throw DimensionError("bbf form without a symplectic class needs top degree 4");
  const int m = r.dim(2);
  Matrix<Rational> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = Rational(1, 2) *
                r.integrate(r.multiply(r.basis_vector(r.offset(2) + i), r.basis_vector(r.offset(2) + j)));
  return QuadraticForm(g);
}

QuadraticForm bbf_form(const BogomolovModel& m) {
  auto rg = m.ring.cast<Gaussian>();
  Vec<Gaussian> s = rg.zero(), sb = rg.zero();
  for (std::size_t k = 0; k < m.u.size(); ++k) {
    Gaussian z(m.u[k], m.v[k]);
    s[rg.offset(2) + k] = z;
    sb[rg.offset(2) + k] = conj(z);
  }
  return QuadraticForm(real_matrix(bbf_gram(rg, s, sb, m.n)));
}

FujikiData fujiki_check(const GradedAlgebra<Rational>& r, const QuadraticForm& form, int extra, unsigned seed) {
  if (r.top_degree() % 4 != 0) throw DimensionError("Fujiki relation needs top degree 4n");
  const int n = r.top_degree() / 4;
  const int m = r.dim(2);
  if (static_cast<int>(form.dim()) != m) throw DimensionError("form dimension differs from degree 2");

  std::vector<Vec<Rational>> spanning;
  for (int i = 0; i < m; ++i) {
    spanning.push_back(unit_vec<Rational>(m, i));
    for (int j = i + 1; j < m; ++j) spanning.push_back(unit_vec<Rational>(m, i) + unit_vec<Rational>(m, j));
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Vec<Rational>> verify;
  while (static_cast<int>(verify.size()) < extra) {
    Vec<Rational> v(m);
    for (auto& x : v) x = Rational(d(rng));
    if (!is_zero_vec(v)) verify.push_back(std::move(v));
  }

  auto top_power = [&](const Vec<Rational>& v) { return r.integrate(r.power(r.embed(2, v), 2 * n)); };
  auto qn = [&](const Vec<Rational>& v) {
    Rational p(1), x = form(v);
    for (int i = 0; i < n; ++i) p *= x;
    return p;
  };

  FujikiData out{form, Rational(0), n, 0};
  bool fitted = false;
  for (const auto* set : {&spanning, &verify})
    for (const auto& v : *set) {
      Rational lhs = top_power(v), rhs = qn(v);
      if (!fitted && !rhs.is_zero()) {
        out.c = lhs / rhs;
        fitted = true;
      }
      if (!fitted) {
        if (!lhs.is_zero()) throw MathError("Fujiki relation fails: nonzero top power on a null class");
        continue;
      }
      if (!(lhs == out.c * rhs))
        throw MathError("Fujiki relation fails: int a^" + std::to_string(2 * n) + " = " + lhs.to_string() +
                        " but c q(a)^" + std::to_string(n) + " = " + (out.c * rhs).to_string());
      ++out.checked;
    }
  if (!fitted) throw MathError("Fujiki relation fails: the form vanishes on every test class");
  return out;
}

Signature form_signature(const QuadraticForm& form) {
  Signature s = form.signature();
  if (s.null != 0) throw ValidationError("degenerate form: signature " + to_string(s));
  return s;
}

template Matrix<Rational> bbf_gram<Rational>(const GradedAlgebra<Rational>&, const Vec<Rational>&,
                                             const Vec<Rational>&, int);
template Matrix<Gaussian> bbf_gram<Gaussian>(const GradedAlgebra<Gaussian>&, const Vec<Gaussian>&,
                                             const Vec<Gaussian>&, int);

}  // namespace llv
