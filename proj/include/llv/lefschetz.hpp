#pragma once

#include <optional>
#include <vector>

#include "llv/graded_algebra.hpp"

namespace llv {

/// Operators are full matrices on the total ring; L raises the weight by 2, Lam lowers it by 2.
template <typename F>
struct Sl2Triple {
  Matrix<F> L;
  Matrix<F> Lam;
  Matrix<F> H;
  /// False when the closed-form Lam disagreed with the linear solve and the solve was used.
  bool formula_agreed = true;
  /// True when the linear solve was run as a cross-check.
  bool cross_checked = false;
};

/// Matrix of x -> a·x for a homogeneous degree-2 class a.
template <typename F>
Matrix<F> cup_operator(const GradedAlgebra<F>& r, const Vec<F>& a);

/// Weight deg(i) - top/2 of every basis element.
template <typename F>
std::vector<int> degree_weights(const GradedAlgebra<F>& r);

template <typename F>
Matrix<F> weight_operator(const std::vector<int>& weights);

/// L_a^j : A^{M-j} -> A^{M+j} is bijective for 1 <= j <= M, where M = top/2.
template <typename F>
bool hl_test(const GradedAlgebra<F>& r, const Vec<F>& a);

/// Completes L to an sl2 triple whose H is diagonal with the given weights. Lam is built
/// from Lefschetz strings over primitives; when the number of unknowns is at most
/// `solve_limit` the result is cross-checked against solve_lambda, which wins on mismatch.
/// Throws MathError("not an HL class") when L does not satisfy Hard Lefschetz for the weights.
template <typename F>
Sl2Triple<F> complete_sl2(const Matrix<F>& L, const std::vector<int>& weights, std::size_t solve_limit = 400);

template <typename F>
Sl2Triple<F> complete_sl2(const GradedAlgebra<F>& r, const Vec<F>& a, std::size_t solve_limit = 400);

/// Unique Lam lowering the weight by 2 with [L, Lam] = H, or nullopt if none or not unique.
template <typename F>
std::optional<Matrix<F>> solve_lambda(const Matrix<F>& L, const std::vector<int>& weights);

/// [L, Lam] = H, [H, L] = 2L, [H, Lam] = -2 Lam.
template <typename F>
ValidationReport check_triple(const Sl2Triple<F>& t);

template <typename F>
struct PrimitiveComponent {
  int j = 0;  // x = sum L^j x_j
  int weight = 0;  // H-weight of x_j, always <= 0
  Vec<F> x;
};

/// Components x_j with x = sum_j L^j x_j and Lam x_j = 0. x must be an H-eigenvector.
template <typename F>
std::vector<PrimitiveComponent<F>> primitive_decomposition(const Sl2Triple<F>& t, const Vec<F>& x);

/// sl2 triples for sigma (weights p - n) and sigma-bar (weights q - n).
template <typename F>
struct SymplecticTriples {
  Sl2Triple<F> sigma;
  Sl2Triple<F> sigma_bar;
};

template <typename F>
SymplecticTriples<F> symplectic_triples(const BigradedAlgebra<F>& b);

/// L_sigma^j : (n-j, q) -> (n+j, q) and L_sigma-bar^j : (p, n-j) -> (p, n+j) bijective for all j >= 1.
template <typename F>
ValidationReport symplectic_hl_check(const BigradedAlgebra<F>& b);

/// [Lam_sigma, Lam_sigma-bar] = [L_sigma, Lam_sigma-bar] = [L_sigma-bar, Lam_sigma] = 0, and the
/// sigma-primitive components of sigma-bar-primitive basis pieces are sigma-bar-primitive.
template <typename F>
ValidationReport simultaneous_primitivity_check(const BigradedAlgebra<F>& b);

}  // namespace llv
