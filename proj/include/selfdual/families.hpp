#pragma once

// Seeded generators of relation spaces with prescribed structure, used by the
// property tests and the acceptance suite.

#include "selfdual/classify.hpp"

#include <random>

namespace selfdual {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// p/q with p in [-9, 9] and q in [1, 5].
  Rational scalar();
  Rational nonzero_scalar();
  int integer(int lo, int hi);
  Matrix matrix(Eigen::Index rows, Eigen::Index cols);
  /// Random k x n matrix of rank k.
  Matrix full_rank(Eigen::Index k, Eigen::Index n);
  /// Random invertible n x n matrix.
  Matrix invertible(Eigen::Index n);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Rank-2 planes in k^4.
Matrix random_plane(Sampler& s);
Matrix plane_y1(Sampler& s);   // p13 = p24
Matrix plane_y2(Sampler& s);   // p14 = p12 + p23
Matrix plane_u1(Sampler& s);   // (U1) family, random gamma
Matrix plane_u2(Sampler& s);   // (U2) family, random gamma
Matrix plane_off_y(Sampler& s);  // neither Y1 nor Y2

/// 2M+ + 2M2 (plus = true) or 2M- + 2M2.
RelationSpace assemble_r34(bool plus, const Matrix& plane);
/// M+ + M- + 2M2 with u+(s), u-(t).
RelationSpace assemble_r5(const std::array<Rational, 2>& s, const std::array<Rational, 2>& t, const Matrix& plane);

/// An R3/R4 or R5 relation space whose class set contains `label`. Y1, Y2, X3
/// and X4 points are self-dual; generic X1 and X2 points are not.
RelationSpace random_member(ClassLabel label, Sampler& s);

RelationSpace random_r1(Sampler& s);
RelationSpace random_r2(Sampler& s);
/// R3/R4 with a plane outside Y1 and Y2.
RelationSpace random_r34_nonmember(Sampler& s);
/// A uniformly generated k-dimensional subspace of F(3).
RelationSpace random_subspace(Eigen::Index k, Sampler& s);
/// The same space presented by a random invertible recombination of its basis
/// with every row rescaled.
Matrix recombine(const RelationSpace& u, Sampler& s);

}  // namespace selfdual
