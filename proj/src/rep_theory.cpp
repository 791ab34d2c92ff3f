#include "selfdual/rep_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfdual {

namespace {

int irrep_dim(Irrep irrep) { return irrep == Irrep::standard ? 2 : 1; }

Matrix build_projector(Irrep irrep) {
  Matrix p = Matrix::Zero(kArity3Dim, kArity3Dim);
  for (const auto& g : Perm3::all()) {
    p += Rational(character(irrep, g.inverse())) * action_matrix(g);
  }
  return p * Rational(irrep_dim(irrep), 6);
}

RelationSpace project(const RelationSpace& u, Irrep irrep) {
  if (u.dim() == 0) return {};
  return RelationSpace(Matrix(u.basis() * isotypic_projector(irrep).transpose()));
}

std::array<Rational, 2> normalized(const Rational& first, const Rational& second) {
  const Rational& lead = first != 0 ? first : second;
  return {first / lead, second / lead};
}

}  // namespace

int character(Irrep irrep, const Perm3& g) {
  const bool is_identity = g == Perm3::identity();
  switch (irrep) {
    case Irrep::trivial:
      return 1;
    case Irrep::sign:
      return g.sign();
    case Irrep::standard:
      return is_identity ? 2 : (g.is_transposition() ? 0 : -1);
  }
  throw std::logic_error("character: unknown irrep");
}

Matrix m2_table(const Perm3& g) {
  // Words in (13) and (23) reaching every element, composed right to left.
  Matrix t13(2, 2);
  t13 << 1, -1, 0, -1;
  Matrix t23(2, 2);
  t23 << 0, 1, 1, 0;
  std::vector<std::pair<Perm3, Matrix>> known{{Perm3(), Matrix::Identity(2, 2)}};
  for (std::size_t k = 0; k < known.size() && known.size() < 6; ++k) {
    for (const auto& [gen, m] : {std::pair{Perm3::transposition(1, 3), t13}, std::pair{Perm3::transposition(2, 3), t23}}) {
      const Perm3 next = gen * known[k].first;
      const bool seen = std::any_of(known.begin(), known.end(), [&](const auto& e) { return e.first == next; });
      // (gen h)(c) = gen(h(c)) = (c M_h) M_gen
      if (!seen) known.emplace_back(next, Matrix(known[k].second * m));
    }
  }
  for (const auto& [h, m] : known)
    if (h == g) return m;
  throw std::logic_error("m2_table: group not generated");
}

const Matrix& isotypic_projector(Irrep irrep) {
  static const Matrix plus = build_projector(Irrep::trivial);
  static const Matrix minus = build_projector(Irrep::sign);
  static const Matrix two = build_projector(Irrep::standard);
  switch (irrep) {
    case Irrep::trivial:
      return plus;
    case Irrep::sign:
      return minus;
    case Irrep::standard:
      return two;
  }
  throw std::logic_error("isotypic_projector: unknown irrep");
}

IsotypicDecomposition decompose(const RelationSpace& u) {
  if (auto g = invariance_violation(u)) {
    throw std::invalid_argument("decompose: subspace is not S3-invariant (moved by " +
                                g->to_string() + ")");
  }
  IsotypicDecomposition d;
  d.comp_plus = project(u, Irrep::trivial);
  d.comp_minus = project(u, Irrep::sign);
  d.comp_two = project(u, Irrep::standard);
  d.m_plus = d.comp_plus.dim();
  d.m_minus = d.comp_minus.dim();
  if (d.comp_two.dim() % 2 != 0) {
    throw std::logic_error("decompose: M2-isotypic component has odd dimension");
  }
  d.m_two = d.comp_two.dim() / 2;
  if (d.m_plus + d.m_minus + 2 * d.m_two != u.dim()) {
    throw std::logic_error("decompose: isotypic components do not add up to U");
  }
  return d;
}

std::array<Rational, 6> module_character(const RelationSpace& u) {
  std::array<Rational, 6> chi{};
  if (u.dim() == 0) return chi;
  const auto pivots = rref(u.basis()).pivots;
  std::size_t k = 0;
  for (const auto& g : Perm3::all()) {
    const Matrix moved = u.basis() * action_matrix(g).transpose();
    // Coordinates of a vector of U in the reduced basis are its pivot entries.
    Rational trace = 0;
    for (Eigen::Index i = 0; i < u.dim(); ++i) trace += moved(i, pivots[static_cast<std::size_t>(i)]);
    chi[k++] = trace;
  }
  return chi;
}

std::array<Eigen::Index, 3> character_multiplicities(const RelationSpace& u) {
  const auto chi = module_character(u);
  std::array<Eigen::Index, 3> out{};
  const std::array<Irrep, 3> irreps{Irrep::trivial, Irrep::sign, Irrep::standard};
  for (std::size_t r = 0; r < 3; ++r) {
    Rational inner = 0;
    for (std::size_t k = 0; k < 6; ++k) inner += chi[k] * character(irreps[r], Perm3::all()[k]);
    inner /= 6;
    if (denominator(inner) != 1) throw std::logic_error("character_multiplicities: non-integral");
    out[r] = numerator(inner).convert_to<Eigen::Index>();
  }
  return out;
}

ParameterPlane extract_parameter_plane(const IsotypicDecomposition& d) {
  if (d.m_two != 2 && d.m_two != 3) {
    throw std::invalid_argument("extract_parameter_plane: M2 multiplicity must be 2 or 3");
  }
  ParameterPlane plane{preimage_rowspace(t_matrix(1), d.comp_two.basis())};
  if (plane.dim() != d.m_two || !(m2_component(plane) == d.comp_two)) {
    throw std::logic_error("extract_parameter_plane: parameter space does not match M2 component");
  }
  return plane;
}

RelationSpace m2_component(const ParameterPlane& plane) {
  Matrix rows(2 * plane.dim(), kArity3Dim);
  rows << plane.basis * t_matrix(1), plane.basis * t_matrix(2);
  return RelationSpace(rows);
}

SegreLines extract_segre_lines(const IsotypicDecomposition& d) {
  if (d.m_plus != 1 || d.m_minus != 1) {
    throw std::invalid_argument("extract_segre_lines: needs one copy each of M+ and M-");
  }
  const Vector12 vp = d.comp_plus.basis().row(0);
  const Vector12 vm = d.comp_minus.basis().row(0);
  SegreLines lines{normalized(vp(0), vp(2)), normalized(vm(0), vm(2))};
  const Vector12 rp = u_plus(lines.s[0], lines.s[1]);
  const Vector12 rm = u_minus(lines.t[0], lines.t[1]);
  if (!rowspace_equal(Matrix(rp), Matrix(vp)) || !rowspace_equal(Matrix(rm), Matrix(vm))) {
    throw std::logic_error("extract_segre_lines: component is not of the u+/u- form");
  }
  return lines;
}

}  // namespace selfdual
