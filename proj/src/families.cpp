#include "selfdual/families.hpp"

namespace selfdual {

Rational Sampler::scalar() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const int p = num(rng_);
  return Rational(p, den(rng_));
}

Rational Sampler::nonzero_scalar() {
  for (;;) {
    Rational r = scalar();
    if (r != 0) return r;
  }
}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Matrix Sampler::matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = scalar();
  return m;
}

Matrix Sampler::full_rank(Eigen::Index k, Eigen::Index n) {
  for (;;) {
    Matrix m = matrix(k, n);
    if (rank(m) == k) return m;
  }
}

Matrix Sampler::invertible(Eigen::Index n) { return full_rank(n, n); }

namespace {

// A random vector y with c . y = 0 making (x, y) a rank-2 plane.
Matrix plane_from_constraint(Sampler& s, const Matrix& x, const Matrix& c) {
  const Matrix ker = kernel(c);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix plane(2, 4);
    plane.row(0) = x;
    plane.row(1) = s.matrix(1, ker.rows()) * ker;
    if (rank(plane) == 2) return plane;
  }
  return Matrix(0, 4);
}

Matrix constrained_plane(Sampler& s, bool y1) {
  for (;;) {
    const Matrix x = s.matrix(1, 4);
    if (is_zero(x)) continue;
    Matrix c(1, 4);
    if (y1) {
      c << -x(0, 2), x(0, 3), x(0, 0), -x(0, 1);
    } else {
      c << x(0, 1) - x(0, 3), -x(0, 0) + x(0, 2), -x(0, 1), x(0, 0);
    }
    Matrix plane = plane_from_constraint(s, x, c);
    if (plane.rows() == 2) return s.invertible(2) * plane;
  }
}

RowVector12<Rational> u2(int which, const Matrix& row) {
  return u_two<Rational>(which, {row(0, 0), row(0, 1), row(0, 2), row(0, 3)});
}

void put_m2(Matrix& rows, Eigen::Index at, const Matrix& plane) {
  for (int i : {1, 2})
    for (Eigen::Index k = 0; k < 2; ++k) rows.row(at++) = u2(i, plane.row(k));
}

std::array<Rational, 2> nonzero_pair(Sampler& s) {
  for (;;) {
    std::array<Rational, 2> p{s.scalar(), s.scalar()};
    if (p[0] != 0 || p[1] != 0) return p;
  }
}

}  // namespace

Matrix random_plane(Sampler& s) { return s.full_rank(2, 4); }
Matrix plane_y1(Sampler& s) { return constrained_plane(s, true); }
Matrix plane_y2(Sampler& s) { return constrained_plane(s, false); }

Matrix plane_u1(Sampler& s) {
  Matrix m(2, 4);
  if (s.integer(0, 9) == 0) {
    m << 0, 0, 1, 1, 1, 1, 0, 0;
  } else {
    const Rational g = s.scalar();
    m << g, g, 0, 1, -g, -g, 1, 0;
  }
  return s.invertible(2) * m;
}

Matrix plane_u2(Sampler& s) {
  Matrix m(2, 4);
  if (s.integer(0, 9) == 0) {
    m << 0, 0, -1, 1, -1, 1, 0, 0;
  } else {
    const Rational g = s.scalar();
    m << -g, g + 2, 0, 1, 2 - g, g, 1, 0;
  }
  return s.invertible(2) * m;
}

Matrix plane_off_y(Sampler& s) {
  for (;;) {
    Matrix m = random_plane(s);
    const PlaneLoci loci = plane_loci(plucker(ParameterPlane{m}));
    if (!loci.u3 && !loci.u4) return m;
  }
}

RelationSpace assemble_r34(bool plus, const Matrix& plane) {
  Matrix rows(6, kArity3Dim);
  const Rational one(1);
  const Rational zero(0);
  rows.row(0) = plus ? u_plus(one, zero) : u_minus(one, zero);
  rows.row(1) = plus ? u_plus(zero, one) : u_minus(zero, one);
  put_m2(rows, 2, plane);
  return RelationSpace(rows);
}

RelationSpace assemble_r5(const std::array<Rational, 2>& s, const std::array<Rational, 2>& t, const Matrix& plane) {
  Matrix rows(6, kArity3Dim);
  rows.row(0) = u_plus(s[0], s[1]);
  rows.row(1) = u_minus(t[0], t[1]);
  put_m2(rows, 2, plane);
  return RelationSpace(rows);
}

RelationSpace random_member(ClassLabel label, Sampler& s) {
  switch (label) {
    case ClassLabel::Y1:
      return assemble_r34(s.integer(0, 1) == 1, plane_y1(s));
    case ClassLabel::Y2:
      return assemble_r34(s.integer(0, 1) == 1, plane_y2(s));
    case ClassLabel::X1:
    case ClassLabel::X2: {
      const Matrix plane = label == ClassLabel::X1 ? plane_u1(s) : plane_u2(s);
      for (;;) {
        const auto sv = nonzero_pair(s);
        const auto tv = nonzero_pair(s);
        const SegrePoint z = segre(sv, tv);
        if (z.z11() * z.z11() + z.z22() * z.z22() != z.z12() * z.z12() + z.z21() * z.z21())
          return assemble_r5(sv, tv, plane);
      }
    }
    case ClassLabel::X3: {
      // z11 = z22 <=> t proportional to (s2, s1).
      const auto sv = nonzero_pair(s);
      const Rational lambda = s.nonzero_scalar();
      return assemble_r5(sv, {lambda * sv[1], lambda * sv[0]}, plane_y1(s));
    }
    case ClassLabel::X4: {
      // z12 = z21 <=> t proportional to s.
      const auto sv = nonzero_pair(s);
      const Rational lambda = s.nonzero_scalar();
      return assemble_r5(sv, {lambda * sv[0], lambda * sv[1]}, plane_y2(s));
    }
  }
  throw std::invalid_argument("random_member: unknown class");
}

RelationSpace random_r1(Sampler& s) {
  Matrix rows(6, kArity3Dim);
  const Rational one(1);
  const Rational zero(0);
  rows.row(0) = u_plus(one, zero);
  rows.row(1) = u_plus(zero, one);
  rows.row(2) = u_minus(one, zero);
  rows.row(3) = u_minus(zero, one);
  Matrix x;
  do {
    x = s.matrix(1, 4);
  } while (is_zero(x));
  rows.row(4) = u2(1, x);
  rows.row(5) = u2(2, x);
  return RelationSpace(rows);
}

RelationSpace random_r2(Sampler& s) {
  const Matrix w = s.full_rank(3, 4);
  Matrix rows(6, kArity3Dim);
  Eigen::Index at = 0;
  for (int i : {1, 2})
    for (Eigen::Index k = 0; k < 3; ++k) rows.row(at++) = u2(i, w.row(k));
  return RelationSpace(rows);
}

RelationSpace random_r34_nonmember(Sampler& s) { return assemble_r34(s.integer(0, 1) == 1, plane_off_y(s)); }

RelationSpace random_subspace(Eigen::Index k, Sampler& s) { return RelationSpace(s.full_rank(k, kArity3Dim)); }

Matrix recombine(const RelationSpace& u, Sampler& s) {
  Matrix m = s.invertible(u.dim()) * u.basis();
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) *= s.nonzero_scalar();
  return m;
}

}  // namespace selfdual
