#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "llv/quadratic.hpp"

namespace llv {

class CliffordAlgebra;

/// Coefficients over the blade basis e_S, S a bitmask of orthogonal generators.
struct CliffordElement {
  std::shared_ptr<const CliffordAlgebra> algebra;
  Vec<Rational> coeffs;
};

/// C(V, q) = T(V) / (v v - q(v)) in an orthogonal basis f_1..f_m of V found by congruence.
class CliffordAlgebra : public std::enable_shared_from_this<CliffordAlgebra> {
 public:
  class Token {
    Token() = default;
    friend std::shared_ptr<const CliffordAlgebra> clifford(const QuadraticForm& q);
  };
  CliffordAlgebra(Token, const QuadraticForm& q);

  int generators() const { return m_; }
  std::size_t dim() const { return std::size_t{1} << m_; }
  const QuadraticForm& form() const { return q_; }
  /// q(f_i, f_i).
  const Vec<Rational>& diagonal() const { return d_; }
  /// Rows are the orthogonal basis vectors in the input coordinates.
  const Matrix<Rational>& orthogonal_basis() const { return basis_; }

  CliffordElement zero() const;
  CliffordElement one() const;
  CliffordElement blade(std::uint32_t mask, const Rational& c = Rational(1)) const;
  /// The element of V given in the input coordinates.
  CliffordElement vector(const Vec<Rational>& v) const;
  std::string label(std::uint32_t mask) const;

  /// e_S e_T = blade_factor(S, T) e_{S xor T}.
  Rational blade_factor(std::uint32_t s, std::uint32_t t) const;

 private:
  int m_;
  QuadraticForm q_;
  Vec<Rational> d_;
  Matrix<Rational> basis_;
  Matrix<Rational> to_orth_;  // input coordinates -> orthogonal coordinates
};

/// Throws ValidationError on a degenerate form and DimensionError above 20 generators.
std::shared_ptr<const CliffordAlgebra> clifford(const QuadraticForm& q);

/// Throws ValidationError when x and y live in different algebras.
CliffordElement cl_multiply(const CliffordElement& x, const CliffordElement& y);
CliffordElement cl_add(const CliffordElement& x, const CliffordElement& y);
CliffordElement cl_scale(const Rational& c, const CliffordElement& x);
/// Grade involution: e_S -> (-1)^|S| e_S.
CliffordElement parity(const CliffordElement& x);
/// Anti-automorphism reversing generator order: e_S -> (-1)^(k(k-1)/2) e_S, k = |S|.
CliffordElement reversal(const CliffordElement& x);
/// parity composed with reversal.
CliffordElement conjugate(const CliffordElement& x);
/// Trace of left multiplication divided by 2^m, so Tr(1) = 1; equals the coefficient of 1.
Rational cl_trace(const CliffordElement& x);
bool operator==(const CliffordElement& x, const CliffordElement& y);

/// mu = gamma gamma' / sqrt(q(gamma) q(gamma')), so mu^2 = -1. Requires q(gamma, gamma') = 0,
/// both norms positive, and a rational square root of the product of the norms
/// (otherwise MathError "requires admissible pair").
CliffordElement complex_structure(const CliffordAlgebra& c, const Vec<Rational>& gamma, const Vec<Rational>& gamma_p);

struct PolarizationReport {
  Matrix<Rational> gram;   // sigma_a(e_S, e_T) = Tr(e_S a conj(e_T))
  bool symmetric = false;
  bool antisymmetric = false;
  Matrix<Rational> probe;  // sigma_a(e_S, a e_T)
  Signature probe_signature;
  bool plus_passes = false;   // probe positive definite
  bool minus_passes = false;  // probe negative definite
};

/// Gram matrix of sigma_a and the positivity probe x, y -> sigma_a(x, a y), decided by the
/// exact signature of the probe. Refuses (DimensionError) above 10 generators.
PolarizationReport polarization_form(const CliffordAlgebra& c, const CliffordElement& a);

/// sigma_a Gram matrix, rows computed with OpenMP.
Matrix<Rational> polarization_gram(const CliffordAlgebra& c, const CliffordElement& a);
Matrix<Rational> polarization_gram_serial(const CliffordAlgebra& c, const CliffordElement& a);

/// Matrix of left multiplication by x on the blade basis.
Matrix<Rational> left_multiplication(const CliffordElement& x);

}  // namespace llv
