#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llv/graded_algebra.hpp"
#include "llv/quadratic.hpp"
#include "llv/subspace.hpp"

namespace llv {

/// Increasing filtration of one graded piece: F_m = 0 below lo, F_m = steps[m - lo] up to
/// hi(), and the whole space above.
struct Filtration {
  int degree = 0;
  std::size_t ambient = 0;
  int lo = 0;
  std::vector<Subspace<Rational>> steps;

  int hi() const { return lo + static_cast<int>(steps.size()) - 1; }
  Subspace<Rational> at(int m) const;
  /// dim F_m / F_{m-1} for every m where it is nonzero.
  std::map<int, int> graded_dims() const;
  bool increasing() const;
};

/// Trims constant ends so that F_lo is the first nonzero step and F_hi the first full one.
Filtration make_filtration(int degree, std::size_t ambient, const std::map<int, Subspace<Rational>>& steps);

/// P_m H^k = sum over 1 <= i <= 2n+1 of ker L^{2n+m+i-k} and im L^{i-1}, intersected within
/// degree k, with ker L^j = 0 for j <= 0 and L^0 the identity; n = top / 4. beta is given in
/// degree-2 coordinates. Throws ValidationError when beta is zero or q(beta) != 0.
Filtration perverse_filtration(const GradedAlgebra<Rational>& r, const Vec<Rational>& beta, int k,
                               const QuadraticForm& q);

/// Same without the isotropy check; beta is a full ring vector of degree 2.
Filtration perverse_filtration_unchecked(const GradedAlgebra<Rational>& r, const Vec<Rational>& beta, int k);

/// P_m with beta = sigma-bar equals the sum of the (p, k - p) pieces with p <= m + n, in every degree.
ValidationReport perverse_hodge_check(const BigradedAlgebra<Rational>& b);

/// Smallest d with N^d = 0. Throws MathError when N is not nilpotent.
int nilpotent_index(const Matrix<Rational>& N);

/// Weight filtration of a nilpotent N centred at `center`: N W_j in W_{j-2} and
/// N^j : gr_{center+j} -> gr_{center-j} an isomorphism. Computed from an sl2 completion of N
/// up to `jm_limit` dimensions and from the kernel/image formula above; both axioms are
/// re-checked before returning (MathError otherwise).
Filtration weight_filtration(const Matrix<Rational>& N, int center, std::size_t jm_limit = 20);

/// W_{center+k} = sum over j >= max(0, -k) of ker N^{k+j+1} and im N^j.
Filtration weight_filtration_formula(const Matrix<Rational>& N, int center);

/// W_{center+j} = sum of eigenspaces of H with eigenvalue <= j, where (N, H, Y) is an sl2
/// triple with N lowering; solved by exact linear systems.
Filtration weight_filtration_sl2(const Matrix<Rational>& N, int center);

/// Both defining axioms; issues name the failing index.
ValidationReport check_weight_filtration(const Matrix<Rational>& N, const Filtration& w, int center);

/// q(Nx, conj(N x)) > 0 for a complex vector x; q and N rational.
bool nilpotent_orbit_check(const Matrix<Rational>& N, const Vec<Gaussian>& x, const QuadraticForm& q);

/// Degree-2 classes with q(beta) = q(eta) = 0, q(rho) > 0, q(eta, rho) = q(beta, rho) = 0.
struct LagrangianTriple {
  Vec<Rational> beta;
  Vec<Rational> eta;
  Vec<Rational> rho;
};

ValidationReport validate_triple(const LagrangianTriple& t, const QuadraticForm& q);

/// beta from find_isotropic, rho the first enumerated positive class orthogonal to beta,
/// eta the first enumerated isotropic class orthogonal to rho with q(beta, eta) != 0.
LagrangianTriple find_lagrangian_triple(const QuadraticForm& q, int bound = 3);

/// Same construction around a given beta. Throws ValidationError unless beta is isotropic and nonzero.
LagrangianTriple lagrangian_triple_for(const QuadraticForm& q, const Vec<Rational>& beta);

/// N = [L_beta, Lam_rho] on the whole ring. Throws ValidationError on an invalid triple and
/// MathError when rho is not HL or N is not nilpotent.
Matrix<Rational> lagrangian_monodromy(const GradedAlgebra<Rational>& r, const LagrangianTriple& t,
                                      const QuadraticForm& q);

/// Restriction of a degree-preserving operator to degree k.
Matrix<Rational> degree_block(const GradedAlgebra<Rational>& r, const Matrix<Rational>& op, int k);

struct PwRow {
  int m = 0;
  int p_dim = 0;
  int w_dim = 0;
};

struct PwComparison {
  bool match = false;
  std::vector<PwRow> rows;
};

/// P_m = W_{scale m + shift} for every m in the union of both index ranges.
PwComparison pw_compare(const Filtration& P, const Filtration& W, int shift, int scale = 2);

struct PwDegree {
  int degree = 0;
  Filtration P;
  Filtration W;
  PwComparison cmp;  // at the common shift, or at the last tried shift when none works
};

struct PwResult {
  std::optional<int> shift;  // common shift over all degrees
  int window_lo = 0;
  int window_hi = 0;
  std::vector<PwDegree> degrees;
};

/// Perverse filtration of beta against the weight filtration of N = [L_beta, Lam_rho] in
/// each nonzero degree k (W centred at k); searches one shift in [-2n-2, 2n+2] working for all
/// degrees. Degrees are processed with OpenMP.
PwResult pw_check(const GradedAlgebra<Rational>& r, const LagrangianTriple& t, const QuadraticForm& q);
PwResult pw_check_serial(const GradedAlgebra<Rational>& r, const LagrangianTriple& t, const QuadraticForm& q);

}  // namespace llv
