#include "selfdual/classify.hpp"

#include <algorithm>
#include <sstream>

namespace selfdual {

ReprType repr_type(const IsotypicDecomposition& d) {
  ReprType r{ReprTag::other, d.m_plus, d.m_minus, d.m_two};
  const auto key = std::array<Eigen::Index, 3>{d.m_plus, d.m_minus, d.m_two};
  if (key == std::array<Eigen::Index, 3>{2, 2, 1}) r.tag = ReprTag::R1;
  if (key == std::array<Eigen::Index, 3>{0, 0, 3}) r.tag = ReprTag::R2;
  if (key == std::array<Eigen::Index, 3>{2, 0, 2}) r.tag = ReprTag::R3;
  if (key == std::array<Eigen::Index, 3>{0, 2, 2}) r.tag = ReprTag::R4;
  if (key == std::array<Eigen::Index, 3>{1, 1, 2}) r.tag = ReprTag::R5;
  return r;
}

std::string to_string(ReprTag tag) {
  switch (tag) {
    case ReprTag::R1: return "R1";
    case ReprTag::R2: return "R2";
    case ReprTag::R3: return "R3";
    case ReprTag::R4: return "R4";
    case ReprTag::R5: return "R5";
    case ReprTag::other: return "other";
  }
  return "other";
}

std::string to_string(ClassLabel label) {
  static const std::array<const char*, 6> names{"Y1", "Y2", "X1", "X2", "X3", "X4"};
  return names[static_cast<std::size_t>(label)];
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
  for (int k = 0; k < 6; ++k) {
    const auto label = static_cast<ClassLabel>(k);
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

PluckerPoint plucker(const ParameterPlane& plane) {
  if (plane.basis.rows() != 2 || plane.basis.cols() != 4 || rank(plane.basis) != 2) {
    throw std::invalid_argument("plucker: plane must be a rank-2 2x4 matrix");
  }
  const auto& m = plane.basis;
  auto minor = [&](int i, int j) { return m(0, i) * m(1, j) - m(0, j) * m(1, i); };
  return PluckerPoint({minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)});
}

SegrePoint segre(const std::array<Rational, 2>& s, const std::array<Rational, 2>& t) {
  std::array<Rational, 4> z{s[0] * t[0], s[0] * t[1], s[1] * t[0], s[1] * t[1]};
  if (std::all_of(z.begin(), z.end(), [](const Rational& c) { return c == 0; })) {
    throw std::invalid_argument("segre: degenerate Segre point (all coordinates vanish)");
  }
  return SegrePoint(z);
}

PlaneLoci plane_loci(const PluckerPoint& p) {
  PlaneLoci loci;
  loci.u3 = p.p13() == p.p24();
  loci.u4 = p.p14() == p.p12() + p.p23();
  loci.u1 = p.p12() == 0 && p.p13() == p.p14() && p.p14() == p.p23() && p.p23() == p.p24();
  loci.u2 = loci.u3 && loci.u4 && p.p14() + p.p23() + 2 * p.p13() == 0 && p.p12() == 4 * p.p34();
  return loci;
}

std::vector<ClassLabel> membership(const PluckerPoint& p, const std::optional<SegrePoint>& z) {
  std::vector<ClassLabel> out;
  const PlaneLoci loci = plane_loci(p);
  if (!z) {
    if (loci.u3) out.push_back(ClassLabel::Y1);
    if (loci.u4) out.push_back(ClassLabel::Y2);
    return out;
  }
  const bool generic_z =
      z->z11() * z->z11() + z->z22() * z->z22() != z->z12() * z->z12() + z->z21() * z->z21();
  if (loci.u1 && generic_z) out.push_back(ClassLabel::X1);
  if (loci.u2 && generic_z) out.push_back(ClassLabel::X2);
  if (loci.u3 && z->z11() == z->z22()) out.push_back(ClassLabel::X3);
  if (loci.u4 && z->z12() == z->z21()) out.push_back(ClassLabel::X4);
  return out;
}

DualityParams witness(const std::vector<ClassLabel>& classes, const std::optional<SegrePoint>& z) {
  if (classes.empty()) throw std::invalid_argument("witness: empty class set");
  auto has = [&](ClassLabel c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
  if (has(ClassLabel::Y1) || has(ClassLabel::X3)) return {1, 0};
  if (has(ClassLabel::Y2) || has(ClassLabel::X4)) return {0, 1};
  if (!z) throw std::invalid_argument("witness: X1/X2 classes need a Segre point");
  const Rational d1 = z->z11() - z->z22();
  const Rational d2 = z->z12() - z->z21();
  if (d1 == 0 && d2 == 0) return {1, 0};
  return {d2, d1};
}

Matrix sdu_residual(const ParameterPlane& plane, const DualityParams& p) {
  return plane.basis * a_matrix(1, 2, p) * plane.basis.transpose();
}

namespace {

std::string dump(const RelationSpace& u, const Certificate& cert) {
  std::ostringstream out;
  out << "positive classification failed the duality check\n"
      << "repr " << to_string(cert.repr.tag) << ", witness a="
      << (cert.witness ? to_string(cert.witness->a) : "?") << " b="
      << (cert.witness ? to_string(cert.witness->b) : "?") << "\nbasis:\n";
  for (Eigen::Index i = 0; i < u.dim(); ++i) {
    for (Eigen::Index j = 0; j < u.basis().cols(); ++j) out << ' ' << to_string(u.basis()(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace

Certificate classify_selfdual(const RelationSpace& u) {
  Certificate cert;
  if (u.dim() != 6) {
    cert.reason = "dim U⊥ mismatch: dim U = " + std::to_string(u.dim()) + ", self-duality needs dim U = dim U⊥ = 6";
    return cert;
  }
  if (auto g = invariance_violation(u)) {
    cert.reason = "not S3-invariant: moved by " + g->to_string();
    return cert;
  }
  const IsotypicDecomposition d = decompose(u);
  cert.repr = repr_type(d);
  switch (cert.repr.tag) {
    case ReprTag::R1:
      cert.reason = "representation type R1 (2M+ + 2M- + M2) excludes self-duality: u+ and u- cannot be orthogonal for a^2 != b^2";
      return cert;
    case ReprTag::R2:
      cert.reason = "representation type R2 (3M2) excludes self-duality: the orthogonality ideal is improper";
      return cert;
    case ReprTag::other:
      cert.reason = "representation type outside R1-R5";
      return cert;
    default:
      break;
  }

  const ParameterPlane plane = extract_parameter_plane(d);
  cert.plucker = plucker(plane);
  if (cert.repr.tag == ReprTag::R5) {
    const SegreLines lines = extract_segre_lines(d);
    try {
      cert.segre = segre(lines.s, lines.t);
    } catch (const std::invalid_argument&) {
      cert.reason = "degenerate Segre point";
      return cert;
    }
  }
  cert.classes = membership(*cert.plucker, cert.segre);
  if (cert.classes.empty()) {
    cert.reason = cert.segre ? "q(U) lies outside X1, X2, X3, X4" : "p(U) lies outside Y1, Y2";
    return cert;
  }
  const DualityParams candidate = witness(cert.classes, cert.segre);
  if (std::all_of(cert.classes.begin(), cert.classes.end(),
                  [](ClassLabel c) { return c == ClassLabel::X1 || c == ClassLabel::X2; })) {
    // <u+(s),u-(t)> = 0 needs a(z11-z22) = b(z12-z21) but <u-(t),u+(s)> = 0
    // needs a(z11-z22) = -b(z12-z21). Outside X3 and X4 both differences are
    // nonzero, so only a = b = 0 solves the pair.
    if (verify_duality(u, candidate)) {
      cert.witness = candidate;
      throw InternalInconsistency(dump(u, cert));
    }
    cert.reason =
        "q(U) lies in X1/X2 but outside X3, X4: <u+,u-> = 0 forces a(z11-z22) = b(z12-z21) while "
        "<u-,u+> = 0 forces a(z11-z22) = -b(z12-z21), so no g(a,b) with a^2 != b^2 exists";
    return cert;
  }
  cert.witness = candidate;
  cert.verified = verify_duality(u, *cert.witness);
  if (!cert.verified) throw InternalInconsistency(dump(u, cert));
  cert.self_dual = true;
  return cert;
}

}  // namespace selfdual
