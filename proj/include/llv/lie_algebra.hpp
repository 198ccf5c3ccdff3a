#pragma once

#include <vector>

#include "llv/matrix.hpp"
#include "llv/quadratic.hpp"
#include "llv/sparse_echelon.hpp"

namespace llv {

/// Span of N x N matrices kept as a reduced echelon basis of their row-major flattenings.
template <typename F>
class MatrixLieAlgebra {
 public:
  explicit MatrixLieAlgebra(std::size_t n = 0) : n_(n), ech_(n * n) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return ech_.dim(); }
  const SparseEchelon<F>& echelon() const { return ech_; }
  SparseEchelon<F>& echelon() { return ech_; }

  /// Basis matrices ordered by pivot position; independent of insertion order.
  std::vector<Matrix<F>> basis() const;
  bool contains(const Matrix<F>& m) const;
  /// Coordinates with respect to basis(), or nullopt when m is outside the span.
  std::optional<Vec<F>> coordinates(const Matrix<F>& m) const;

 private:
  std::size_t n_;
  SparseEchelon<F> ech_;
};

template <typename F>
Vec<F> flatten(const Matrix<F>& m) {
  return m.data();
}

template <typename F>
Matrix<F> unflatten(const Vec<F>& v, std::size_t n);

/// Smallest bracket-closed span containing the generators: the span is grown by ad(g) for
/// every generator g until nothing new appears. Brackets of each frontier are computed with
/// OpenMP; insertion order is fixed, so the result equals lie_closure_serial.
template <typename F>
MatrixLieAlgebra<F> lie_closure(const std::vector<Matrix<F>>& generators);

template <typename F>
MatrixLieAlgebra<F> lie_closure_serial(const std::vector<Matrix<F>>& generators);

/// True when [b_i, b_j] lies in the span for all basis pairs.
template <typename F>
bool is_bracket_closed(const MatrixLieAlgebra<F>& g);

template <typename F>
struct AdGrading {
  std::vector<Matrix<F>> g2, g0, gm2;
};

/// ad(H)-eigenspaces for eigenvalues 2, 0, -2. Throws MathError("decomposition violated")
/// when they do not exhaust g.
template <typename F>
AdGrading<F> ad_grading(const MatrixLieAlgebra<F>& g, const Matrix<F>& H);

/// Matrix of ad(x) on g in the coordinates of basis().
template <typename F>
Matrix<F> ad_matrix(const MatrixLieAlgebra<F>& g, const std::vector<Matrix<F>>& basis, const Matrix<F>& x);

/// tr(ad x ad y) on basis pairs.
template <typename F>
Matrix<F> killing_form(const MatrixLieAlgebra<F>& g);

/// tr(x y) in the defining representation on basis pairs.
template <typename F>
Matrix<F> trace_form(const MatrixLieAlgebra<F>& g);

struct SoReport {
  std::size_t dim = 0;
  std::size_t expected_dim = 0;
  int compact = 0;
  int noncompact = 0;
  int expected_compact = 0;
  int expected_noncompact = 0;
  std::size_t semisimple_part_dim = 0;
  bool exact_killing = true;  // false: trace form of the representation was used
  /// With the trace form: Killing = ratio * trace, verified exactly on `ratio_checks` basis pairs.
  Rational ratio;
  int ratio_checks = 0;
  bool pass = false;
};

/// Compares g with so(V + h) for V of dimension b2 and the given signature, h a
/// hyperbolic plane. The Killing form is computed exactly up to `killing_limit` basis
/// elements; above that the trace form of the representation stands in (for a simple
/// algebra it is a positive multiple of the Killing form) and the ratio is checked against
/// exact Killing values on a sample of basis pairs. Throws MathError("not semisimple") when
/// the form is degenerate.
SoReport so_identify(const MatrixLieAlgebra<Rational>& g, int b2, Signature h2, std::size_t killing_limit = 100);

/// Same with the hyperkahler signature (3, b2 - 3).
SoReport so_identify(const MatrixLieAlgebra<Rational>& g, int b2, std::size_t killing_limit = 100);

}  // namespace llv
