#pragma once

// Self-duality decision for binary quadratic operads P(V,U), dim V(2) = 2.

#include "selfdual/free_operad.hpp"
#include "selfdual/rep_theory.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace selfdual {

/// Projective point given by its canonical representative: the first nonzero
/// coordinate is 1. Two points are equal iff their coordinates are.
template <std::size_t N>
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  /// Throws std::invalid_argument if all coordinates vanish.
  explicit ProjectivePoint(std::array<Rational, N> coords) : coords_(std::move(coords)) {
    const Rational* lead = nullptr;
    for (const auto& c : coords_) {
      if (c != 0) {
        lead = &c;
        break;
      }
    }
    if (lead == nullptr) throw std::invalid_argument("projective point with all coordinates zero");
    const Rational scale = *lead;
    for (auto& c : coords_) c /= scale;
  }
  const std::array<Rational, N>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  bool operator==(const ProjectivePoint&) const = default;

 private:
  std::array<Rational, N> coords_{};
};

/// (p12, p13, p14, p23, p24, p34) on G(2,4).
class PluckerPoint : public ProjectivePoint<6> {
 public:
  using ProjectivePoint<6>::ProjectivePoint;
  const Rational& p12() const { return (*this)[0]; }
  const Rational& p13() const { return (*this)[1]; }
  const Rational& p14() const { return (*this)[2]; }
  const Rational& p23() const { return (*this)[3]; }
  const Rational& p24() const { return (*this)[4]; }
  const Rational& p34() const { return (*this)[5]; }
  /// p12 p34 - p13 p24 + p14 p23
  Rational relation() const { return p12() * p34() - p13() * p24() + p14() * p23(); }
};

/// (z11, z12, z21, z22) on the Segre quadric S(1,1).
class SegrePoint : public ProjectivePoint<4> {
 public:
  using ProjectivePoint<4>::ProjectivePoint;
  const Rational& z11() const { return (*this)[0]; }
  const Rational& z12() const { return (*this)[1]; }
  const Rational& z21() const { return (*this)[2]; }
  const Rational& z22() const { return (*this)[3]; }
  /// z11 z22 - z12 z21
  Rational relation() const { return z11() * z22() - z12() * z21(); }
};

enum class ReprTag { R1, R2, R3, R4, R5, other };

struct ReprType {
  ReprTag tag = ReprTag::other;
  Eigen::Index m_plus = 0;
  Eigen::Index m_minus = 0;
  Eigen::Index m_two = 0;
};

/// R3 and R4 are read as 2M+ + 2M2 and 2M- + 2M2 (the six-dimensional reading).
ReprType repr_type(const IsotypicDecomposition& d);
std::string to_string(ReprTag tag);

enum class ClassLabel { Y1, Y2, X1, X2, X3, X4 };
std::string to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(std::string_view text);

struct Certificate {
  bool self_dual = false;
  ReprType repr;
  std::optional<PluckerPoint> plucker;
  std::optional<SegrePoint> segre;
  std::vector<ClassLabel> classes;  // ascending
  std::optional<DualityParams> witness;
  bool verified = false;
  std::string reason;  // empty when self-dual
};

/// Thrown when a positive classification fails the Gamma(a,b)U = U-perp check.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// p_ij = x_i y_j - x_j y_i of a rank-2 plane (std::invalid_argument otherwise).
PluckerPoint plucker(const ParameterPlane& plane);

/// z_kl = s_k t_l. Throws std::invalid_argument when every z vanishes.
SegrePoint segre(const std::array<Rational, 2>& s, const std::array<Rational, 2>& t);

/// Linear conditions on a plane's Plucker point for each of the parameter
/// families (U1)-(U4).
struct PlaneLoci {
  bool u1 = false;  // p12 = 0, p13 = p14 = p23 = p24
  bool u2 = false;  // p13 = p24, p14 + p23 + 2 p13 = 0, p12 = 4 p34, p14 = p12 + p23
  bool u3 = false;  // p13 = p24
  bool u4 = false;  // p14 = p12 + p23
};
PlaneLoci plane_loci(const PluckerPoint& p);

/// Without z: the subset of {Y1, Y2}. With z: the subset of {X1, X2, X3, X4}.
std::vector<ClassLabel> membership(const PluckerPoint& p, const std::optional<SegrePoint>& z);

/// Preference: Y1/X3 -> (1,0); Y2/X4 -> (0,1); X1/X2 -> (z12 - z21, z11 - z22),
/// or (1,0) when both differences vanish.
DualityParams witness(const std::vector<ClassLabel>& classes, const std::optional<SegrePoint>& z);

/// U_hat A12(a,b) U_hat^T.
Matrix sdu_residual(const ParameterPlane& plane, const DualityParams& p);

/// Full pipeline. A positive answer is always confirmed by verify_duality;
/// a failed confirmation throws InternalInconsistency. Points whose classes
/// are only X1/X2 are rejected: the two orders of the u+/u- pairing impose
/// a(z11 - z22) = b(z12 - z21) and a(z11 - z22) = -b(z12 - z21) together.
Certificate classify_selfdual(const RelationSpace& u);

}  // namespace selfdual
