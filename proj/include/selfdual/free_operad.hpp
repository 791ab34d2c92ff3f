#pragma once

// The arity-3 component F(3) of the free operad on a two-dimensional S2-module
// V(2) = span(mu, mu'), in the basis e1..e12:
//
//   e1 = 1 (x) (mu  (x) mu ),  e2 = (12) e1,
//   e3 = 1 (x) (mu' (x) mu ),  e4 = (12) e3,
//   e_{4+i} = (13) e_i,  e_{8+i} = (23) e_i.
//
// Vectors are row vectors of coordinates; S3 acts on columns through
// action_matrix(g), so g.v has coordinates (action_matrix(g) * v^T)^T.

#include "selfdual/linalg.hpp"
#include "selfdual/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace selfdual {

inline constexpr Eigen::Index kArity3Dim = 12;

template <class Scalar>
using RowVector12 = Eigen::Matrix<Scalar, 1, kArity3Dim>;
using Vector12 = RowVector12<Rational>;

/// A permutation of {1,2,3}. Composition is (g * h)(x) = g(h(x)).
class Perm3 {
 public:
  Perm3() : images_{1, 2, 3} {}
  /// Throws std::invalid_argument unless the images are a permutation.
  explicit Perm3(std::array<int, 3> images);

  static Perm3 identity() { return Perm3(); }
  static Perm3 transposition(int i, int j);
  /// All six elements, identity first, then (12), (13), (23), (123), (132).
  static const std::array<Perm3, 6>& all();
  /// The Coxeter-style generating set {(12), (13), (23)}.
  static const std::array<Perm3, 3>& generators();

  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::array<int, 3>& images() const { return images_; }

  Perm3 operator*(const Perm3& rhs) const;
  Perm3 inverse() const;
  int sign() const;
  bool is_transposition() const;
  bool operator==(const Perm3&) const = default;

  /// Cycle notation: "()", "(12)", "(123)", ...
  std::string to_string() const;

 private:
  std::array<int, 3> images_;
};

/// Generator map parameters g(a,b): mu -> a nu + b nu'.
struct DualityParams {
  Rational a;
  Rational b;
  bool invertible() const { return a * a != b * b; }
};

/// An S3-submodule candidate U of F(3), stored as the canonical (reduced row
/// echelon, zero rows dropped) basis of its row space.
class RelationSpace {
 public:
  RelationSpace() : basis_(0, kArity3Dim) {}
  /// Any spanning set; the rows are canonicalized.
  explicit RelationSpace(const Matrix& rows);

  static RelationSpace whole();

  const Matrix& basis() const { return basis_; }
  Eigen::Index dim() const { return basis_.rows(); }
  bool contains(const Vector12& v) const;

  bool operator==(const RelationSpace& other) const {
    return basis_.rows() == other.basis_.rows() && basis_ == other.basis_;
  }

 private:
  Matrix basis_;
};

/// Sigma(i,j) = <f_i, e_j>.
template <class Scalar = Rational>
MatrixX<Scalar> sigma() {
  static constexpr std::array<int, 12> kDiag{1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1};
  MatrixX<Scalar> s = MatrixX<Scalar>::Zero(kArity3Dim, kArity3Dim);
  for (Eigen::Index i = 0; i < kArity3Dim; ++i) s(i, i) = Scalar(kDiag[static_cast<std::size_t>(i)]);
  return s;
}

/// The 4x4 block of Gamma(a,b), which is (aI + b s) (x) (aI + b s) with s the
/// swap of two coordinates.
template <class Scalar>
MatrixX<Scalar> gamma_block(const Scalar& a, const Scalar& b) {
  const Scalar aa = a * a;
  const Scalar ab = a * b;
  const Scalar bb = b * b;
  MatrixX<Scalar> blk(4, 4);
  blk << aa, ab, ab, bb,
         ab, aa, bb, ab,
         ab, bb, aa, ab,
         bb, ab, ab, aa;
  return blk;
}

/// Matrix of Gamma(a,b): F(3) -> F(3)^v in the bases e and f.
template <class Scalar>
MatrixX<Scalar> gamma(const Scalar& a, const Scalar& b) {
  const MatrixX<Scalar> blk = gamma_block(a, b);
  MatrixX<Scalar> g = MatrixX<Scalar>::Zero(kArity3Dim, kArity3Dim);
  for (Eigen::Index k = 0; k < 3; ++k) g.block(4 * k, 4 * k, 4, 4) = blk;
  return g;
}

inline Matrix gamma(const DualityParams& p) { return gamma<Rational>(p.a, p.b); }

/// Index (0-based) of the basis vector g.e_j.
Eigen::Index act_on_basis(const Perm3& g, Eigen::Index j);

/// rho(g) as a 0/1 permutation matrix with rho(g) e_j = e_{act_on_basis(g, j)}.
template <class Scalar = Rational>
MatrixX<Scalar> action_matrix(const Perm3& g) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(kArity3Dim, kArity3Dim);
  for (Eigen::Index j = 0; j < kArity3Dim; ++j) m(act_on_basis(g, j), j) = Scalar(1);
  return m;
}

/// Coordinates of g.v for a row vector v.
template <class Scalar>
RowVector12<Scalar> act(const Perm3& g, const RowVector12<Scalar>& v) {
  RowVector12<Scalar> out = RowVector12<Scalar>::Constant(Scalar(0));
  for (Eigen::Index j = 0; j < kArity3Dim; ++j) out(act_on_basis(g, j)) = v(j);
  return out;
}

/// <u, v>_{a,b} = u Gamma(a,b) Sigma v^T. The Sigma matrix may be supplied to
/// evaluate against a modified pairing.
template <class Scalar>
Scalar pairing(const RowVector12<Scalar>& u, const RowVector12<Scalar>& v, const Scalar& a,
               const Scalar& b, const MatrixX<Scalar>& sigma_matrix) {
  const RowVectorX<Scalar> left = RowVectorX<Scalar>(u) * gamma(a, b) * sigma_matrix;
  Scalar sum(0);
  for (Eigen::Index j = 0; j < kArity3Dim; ++j) sum += left(j) * v(j);
  return sum;
}

template <class Scalar>
Scalar pairing(const RowVector12<Scalar>& u, const RowVector12<Scalar>& v, const Scalar& a,
               const Scalar& b) {
  return pairing(u, v, a, b, sigma<Scalar>());
}

inline Rational pairing(const Vector12& u, const Vector12& v, const DualityParams& p) {
  return pairing<Rational>(u, v, p.a, p.b);
}

/// U-perp in the dual basis f1..f12: all c with c Sigma u^T = 0 for u in U.
RelationSpace koszul_complement(const RelationSpace& u);

/// First generator among (12), (13), (23) that moves U out of itself.
std::optional<Perm3> invariance_violation(const RelationSpace& u);
inline bool is_invariant(const RelationSpace& u) { return !invariance_violation(u).has_value(); }

/// The S3-submodule generated by the rows.
RelationSpace s3_closure(const Matrix& rows);

/// Gram matrix U Gamma(a,b) Sigma U^T.
Matrix duality_gram(const RelationSpace& u, const DualityParams& p);

/// Decides Gamma(a,b) U = U-perp by comparing row spaces, and cross-checks the
/// answer against vanishing of the Gram matrix. Requires dim U = 6 and
/// a^2 != b^2 (std::invalid_argument otherwise).
bool verify_duality(const RelationSpace& u, const DualityParams& p);

}  // namespace selfdual
