#pragma once

#include <map>
#include <vector>

#include "llv/subspace.hpp"

namespace llv {

/// Eigenspaces of m for the declared integer eigenvalues. Throws MathError when
/// they do not add up to the whole space. Empty eigenspaces are omitted.
template <typename F>
std::map<long, Subspace<F>> integer_eigenspaces(const Matrix<F>& m, const std::vector<long>& candidates) {
  if (!m.is_square()) throw DimensionError("eigenspaces of non-square matrix");
  const std::size_t n = m.rows();
  std::map<long, Subspace<F>> out;
  std::size_t total = 0;
  for (long lam : candidates) {
    if (out.count(lam)) continue;
    Matrix<F> shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= F(lam);
    auto k = kernel(shifted);
    if (k.dim() == 0) continue;
    total += k.dim();
    out.emplace(lam, std::move(k));
  }
  if (total != n) throw MathError("not diagonalizable with given spectrum");
  return out;
}

}  // namespace llv
