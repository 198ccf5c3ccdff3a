#pragma once

#include "llv/fixtures.hpp"
#include "llv/graded_algebra.hpp"
#include "llv/quadratic.hpp"

namespace llv {

/// Gram matrix in degree-2 coordinates of
///   q(a) = (n/2) int (s sb)^{n-1} a^2 + (1-n) int s^{n-1} sb^n a * int s^n sb^{n-1} a
/// with s rescaled by a real factor so that int (s sb)^n = 1. The rescaling needs a rational
/// n-th root of int (s sb)^n. Throws MathError("degenerate symplectic top power") when it is 0.
template <typename F>
Matrix<F> bbf_gram(const GradedAlgebra<F>& r, const Vec<F>& sigma, const Vec<F>& sigma_bar, int n);

/// The form in the ring's own (Hodge) degree-2 coordinates.
QuadraticForm bbf_form(const BigradedAlgebra<Rational>& b);

/// Rings with top degree 4 only: q(a) = 1/2 int a^2.
QuadraticForm bbf_form(const GradedAlgebra<Rational>& r);

/// The form on the real coordinates e1..em of a Bogomolov model, with sigma = u + i v.
QuadraticForm bbf_form(const BogomolovModel& m);

struct FujikiData {
  QuadraticForm form;
  Rational c;  // int a^{2n} = c q(a)^n
  int n = 0;
  int checked = 0;
};

/// Fits c on a spanning set of degree-2 classes and verifies it on `extra` further
/// enumerated classes. Throws MathError("Fujiki relation fails ...") on inconsistency.
FujikiData fujiki_check(const GradedAlgebra<Rational>& r, const QuadraticForm& form, int extra = 100,
                        unsigned seed = 17);

/// Signature of a nondegenerate form; throws ValidationError on degenerate input.
Signature form_signature(const QuadraticForm& form);

}  // namespace llv
