#pragma once

// S3-isotypic structure of F(3) = 2M+ (+) 2M- (+) 4M2 and the explicit
// embeddings of the irreducibles.

#include "selfdual/free_operad.hpp"

#include <array>

namespace selfdual {

enum class Irrep { trivial, sign, standard };

/// Spans a copy of M+ (trivial): (x1, x1, x2, x2) repeated over the three cosets.
template <class Scalar>
RowVector12<Scalar> u_plus(const Scalar& x1, const Scalar& x2) {
  RowVector12<Scalar> v;
  v << x1, x1, x2, x2, x1, x1, x2, x2, x1, x1, x2, x2;
  return v;
}

/// Spans a copy of M- (sign).
template <class Scalar>
RowVector12<Scalar> u_minus(const Scalar& x1, const Scalar& x2) {
  RowVector12<Scalar> v;
  v << x1, -x1, x2, -x2, -x1, x1, -x2, x2, -x1, x1, -x2, x2;
  return v;
}

/// The two vectors u2^1, u2^2 spanning a copy of M2, with
/// (13): u1 -> u1 - u2, u2 -> -u2 and (23): u1 <-> u2.
template <class Scalar>
RowVector12<Scalar> u_two(int which, const std::array<Scalar, 4>& x) {
  const auto& [x1, x2, x3, x4] = x;
  RowVector12<Scalar> v;
  if (which == 1) {
    v << x1, -x1, x2, -x2, x3, x3 - x1, x4, x4 - x2, x1 - x3, -x3, x2 - x4, -x4;
  } else if (which == 2) {
    v << x1 - x3, -x3, x2 - x4, -x4, x3 - x1, x3, x4 - x2, x4, x1, -x1, x2, -x2;
  } else {
    throw std::invalid_argument("u_two: index must be 1 or 2");
  }
  return v;
}

/// T_i with x T_i = u_two(i, x).
template <class Scalar = Rational>
MatrixX<Scalar> t_matrix(int which) {
  MatrixX<Scalar> t(4, kArity3Dim);
  for (int k = 0; k < 4; ++k) {
    std::array<Scalar, 4> unit{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    unit[static_cast<std::size_t>(k)] = Scalar(1);
    t.row(k) = u_two<Scalar>(which, unit);
  }
  return t;
}

/// A_ij(a,b) = T_i Gamma(a,b) Sigma T_j^T; x A_ij y^T = <u2^i(x), u2^j(y)>_{a,b}.
template <class Scalar>
MatrixX<Scalar> a_matrix(int i, int j, const Scalar& a, const Scalar& b,
                         const MatrixX<Scalar>& sigma_matrix) {
  return t_matrix<Scalar>(i) * gamma(a, b) * sigma_matrix * t_matrix<Scalar>(j).transpose();
}

template <class Scalar>
MatrixX<Scalar> a_matrix(int i, int j, const Scalar& a, const Scalar& b) {
  return a_matrix(i, j, a, b, sigma<Scalar>());
}

inline Matrix a_matrix(int i, int j, const DualityParams& p) {
  return a_matrix<Rational>(i, j, p.a, p.b);
}

/// Central idempotent (dim/6) sum_g chi(g^{-1}) rho(g), acting on column vectors.
const Matrix& isotypic_projector(Irrep irrep);

/// Character value of the irreducible on g.
int character(Irrep irrep, const Perm3& g);

/// Action of g on M2 = span(u1, u2) generated from the table
/// (13): u1 -> u1 - u2, u2 -> -u2 and (23): u1 <-> u2. Row i holds the
/// coordinates of g(u_i), so g(c1 u1 + c2 u2) = c * m2_table(g).
Matrix m2_table(const Perm3& g);

struct IsotypicDecomposition {
  Eigen::Index m_plus = 0;
  Eigen::Index m_minus = 0;
  Eigen::Index m_two = 0;
  RelationSpace comp_plus;
  RelationSpace comp_minus;
  RelationSpace comp_two;
};

/// Isotypic components of an S3-invariant U (std::invalid_argument otherwise).
IsotypicDecomposition decompose(const RelationSpace& u);

/// Character of the S3-module U: trace of rho(g) restricted to U, indexed like
/// Perm3::all().
std::array<Rational, 6> module_character(const RelationSpace& u);

/// Multiplicities (M+, M-, M2) from character inner products.
std::array<Eigen::Index, 3> character_multiplicities(const RelationSpace& u);

/// The space of M2-parameters: all x with u_two(1, x) in the M2-component.
struct ParameterPlane {
  Matrix basis;  // canonical rows in k^4
  Eigen::Index dim() const { return basis.rows(); }
};

ParameterPlane extract_parameter_plane(const IsotypicDecomposition& d);

/// Relation subspace spanned by u_two(i, x) for i = 1, 2 and x in the plane.
RelationSpace m2_component(const ParameterPlane& plane);

struct SegreLines {
  std::array<Rational, 2> s;  // comp_plus = span u_plus(s1, s2)
  std::array<Rational, 2> t;  // comp_minus = span u_minus(t1, t2)
};

/// Requires m_plus = m_minus = 1. Each pair is normalized so that its first
/// nonzero coordinate is 1.
SegreLines extract_segre_lines(const IsotypicDecomposition& d);

}  // namespace selfdual
