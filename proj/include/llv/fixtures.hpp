#pragma once

#include <cstdint>
#include <vector>

#include "llv/graded_algebra.hpp"
#include "llv/quadratic.hpp"

namespace llv {

/// dim Sym^k(Q^m).
long sym_dim(int m, int k);

/// diag(1,1,1,-1,...,-1) on Q^22.
QuadraticForm k3_form();

/// Ring with degrees 0, 2, 4: unit, the given quadratic space, and a point class with
/// x·y = gram(x, y)·pt and integral(pt) = 1.
GradedAlgebra<Rational> k3_ring(const QuadraticForm& gram);

/// Exterior algebra on 2g degree-1 generators x1..x_{2g}, integral(x1...x_{2g}) = 1.
GradedAlgebra<Rational> torus_ring(int g);

/// Exterior algebra on dz1..dzg (type (1,0)) and their conjugates (type (0,1)), g even,
/// with sigma = dz1 dz2 + dz3 dz4 + ..., normalized so integral((sigma sigma-bar)^n) = 1.
BigradedAlgebra<Rational> torus_bigraded(int g);

struct BogomolovOptions {
  std::uint64_t seed = 20240917;
  /// Maximum number of isotropic samples for the degree n+1 ideal piece; 0 picks a default.
  long budget = 0;
  /// Extra samples drawn after reaching the predicted dimension.
  int confirm = 8;
};

/// Sym^*(H)/<alpha^{n+1} : q(alpha) = 0> in two coordinate systems.
struct BogomolovModel {
  int n = 0;
  QuadraticForm q0;                    // input form, coordinates e1..em
  GradedAlgebra<Rational> ring;        // monomials in e1..em, degree-2 basis = e1..em
  QuadraticForm qh;                    // form in coordinates s, sb, f3..fm
  BigradedAlgebra<Rational> hodge;     // monomials in s, sb, f3..fm
  Vec<Rational> isotropic;             // the fixed isotropic vector used for sampling (e-coords)
  Vec<Rational> u, v;                  // positive pair, sigma = u + i v
  Rational pair_norm;                  // q(u) = q(v)
  std::vector<Vec<Rational>> frame;    // u, v, f3..fm in e-coordinates
  Matrix<Gaussian> to_hodge;           // e-coordinates -> (s, sb, f) coordinates on degree 2
  long samples_used = 0;
};

BogomolovModel bogomolov_model(const QuadraticForm& q, int n, const BogomolovOptions& opt = {});

}  // namespace llv
