#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llv/lefschetz.hpp"
#include "llv/lie_algebra.hpp"

namespace llv {

/// Deterministic HL classes spanning degree 2: w is the first HL class among basis vectors,
/// sums of two basis vectors and the sum of all of them; then for every basis vector b the
/// first b + t w (t = 0, 1, -1, 2, -2, ...) that is HL.
std::vector<Vec<Rational>> hl_spanning_classes(const GradedAlgebra<Rational>& r);

struct LlvGenerators {
  std::vector<Vec<Rational>> classes;
  std::vector<Sl2Triple<Rational>> triples;
  std::vector<Matrix<Rational>> matrices;  // L_a, Lam_a for every class
};

LlvGenerators llv_generators(const GradedAlgebra<Rational>& r);

/// [Lam_a, Lam_b] = 0. Throws MathError when a or b is not HL.
bool dual_lefschetz_commute(const GradedAlgebra<Rational>& r, const Vec<Rational>& a, const Vec<Rational>& b);

struct WeilResult {
  Matrix<Gaussian> C;         // [L_gamma, Lam_gamma'] with gamma = s + sb, gamma' = -i (s - sb)
  Matrix<Gaussian> expected;  // i (H_sigma - H_sigma-bar)
  bool ok = false;
};

WeilResult weil_operator(const BigradedAlgebra<Rational>& b);

struct DerivationResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

/// D(x y) = D(x) y + x D(y) on all basis pairs.
DerivationResult derivation_check(const Matrix<Rational>& D, const GradedAlgebra<Rational>& r);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

struct So41Result {
  std::size_t dim = 0;
  std::vector<Vec<Rational>> omegas;  // rescaled to a common norm when possible
  std::vector<RelationCheck> relations;
  std::string skipped;  // nonempty when the relations could not be checked
};

/// Closure of the three sl2's of a positive orthogonal triple, and the commutator relations
/// with K_ij = [L_i, Lam_j] after rescaling the classes to a common norm.
So41Result so41_subalgebra(const GradedAlgebra<Rational>& r, const QuadraticForm& q,
                           const std::vector<Vec<Rational>>& w);

struct So4Result {
  std::size_t span_rank = 0;
  std::size_t closure_dim = 0;
  bool triples_ok = false;
  bool commuting = false;
  bool weil_in_span = false;
};

So4Result so4_symplectic(const BigradedAlgebra<Rational>& b);

struct VerbitskyResult {
  std::vector<int> dims;      // dims of the degree-2k pieces, k = 0..top/2
  std::vector<int> expected;  // empty when top is not a multiple of 4
  bool dims_match = false;
  bool lambda_stable = false;
  bool identity_holds = false;
  std::vector<Subspace<Rational>> pieces;  // in degree-2k coordinates
};

/// Subalgebra generated by degree 2, its dimensions, stability under Lam_a for the given
/// HL classes, and Lam_a(x y) = L_x(Lam_a y) - [L_x, Lam_a] y for degree-2 x.
VerbitskyResult verbitsky_component(const GradedAlgebra<Rational>& r, const std::vector<Vec<Rational>>& hl_classes);

}  // namespace llv
