#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llv/matrix.hpp"

namespace llv {

struct Signature {
  int pos = 0;
  int neg = 0;
  int null = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// P with rows forming a new basis and diagonal d such that P q P^T = diag(d).
struct Diagonalization {
  Matrix<Rational> basis;
  Vec<Rational> diag;
};

Diagonalization congruence_diagonalize(const Matrix<Rational>& q);

/// Counts of positive, negative and zero entries after congruence diagonalization.
Signature symmetric_signature(const Matrix<Rational>& q);

/// Symmetric bilinear form on Q^m (Gram matrix).
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(Matrix<Rational> gram);

  static QuadraticForm diagonal(const Vec<Rational>& d);
  /// "diag:1,1,1,-1,-1" or a dense "gram:a,b;c,d" matrix.
  static QuadraticForm parse(std::string_view spec);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix<Rational>& gram() const { return gram_; }
  Rational operator()(const Vec<Rational>& v) const { return bilinear(gram_, v, v); }
  Rational pair(const Vec<Rational>& u, const Vec<Rational>& v) const { return bilinear(gram_, u, v); }
  Gaussian pair(const Vec<Gaussian>& u, const Vec<Gaussian>& v) const {
    return bilinear(to_gaussian(gram_), u, v);
  }
  Signature signature() const { return symmetric_signature(gram_); }
  bool nondegenerate() const { return signature().null == 0; }
  QuadraticForm scaled(const Rational& c) const { return QuadraticForm(gram_ * c); }

 private:
  Matrix<Rational> gram_;
};

/// Nonzero rational v with q(v) = 0, found by a bounded search in a diagonal basis.
/// Throws MathError when q is definite or nothing turns up within the bound.
Vec<Rational> find_isotropic(const QuadraticForm& q, int bound = 6);

/// Up to `count` distinct isotropic integer vectors in the input coordinates: supports of
/// size 2..max_support in lexicographic order, coefficients from {1, -1, 2, -2} with the
/// first one positive, non-primitive vectors skipped.
std::vector<Vec<Rational>> isotropic_classes(const QuadraticForm& q, std::size_t count, int max_support = 4);

/// Orthogonal vectors (u, v) with q(u) = q(v) > 0, so that u + i v is isotropic.
struct PositivePair {
  Vec<Rational> u;
  Vec<Rational> v;
  Rational norm;
};

std::optional<PositivePair> find_positive_pair(const QuadraticForm& q, int bound = 4);

}  // namespace llv
