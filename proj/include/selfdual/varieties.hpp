#pragma once

// Multilinear degree-3 identities in one binary operation, encoded as
// relation spaces in F(3).
//
// Dictionary: mu(x, y) = xy and mu'(x, y) = yx. In e1..e4 the first tensor
// slot is the outer operation and the second the inner one, applied to
// (x1, x2) and then x3:
//
//   e1 = (x1x2)x3   e2 = (x2x1)x3   e3 = x3(x1x2)   e4 = x3(x2x1)
//
// and e_{4+i}, e_{8+i} substitute variables by (13) and (23). The resulting
// map is S3-equivariant, and it reproduces the known coordinates of the
// associative, Novikov and Poisson operads.

#include "selfdual/classify.hpp"
#include "selfdual/free_operad.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfdual {

enum class Bracketing { left, right };  // (xi xj)xk or xi(xj xk)

struct Monomial3 {
  Bracketing shape = Bracketing::left;
  /// Variable order read left to right: indices of x_i, a permutation of 1..3.
  std::array<int, 3> vars{1, 2, 3};
  bool operator==(const Monomial3&) const = default;

  std::string to_string() const;
};

/// Index in 0..11 of the basis vector for the monomial.
Eigen::Index basis_index(const Monomial3& m);
/// Inverse of basis_index.
Monomial3 basis_monomial(Eigen::Index index);

struct IdentityTerm {
  Rational coefficient;
  Monomial3 monomial;
};

struct IdentitySpec {
  std::vector<IdentityTerm> terms;
  Vector12 to_vector() const;
  std::string to_string() const;
};

/// Syntax: terms such as "+(1/2)(x1 x2)x3", "-x1(x2 x3)", "3(x2x1)x3";
/// whitespace-insensitive. Several identities are separated by ';'.
std::vector<IdentitySpec> parse_identities(std::string_view text);

/// S3-submodule generated by the identities; throws std::invalid_argument when
/// all of them encode to zero.
RelationSpace encode(const std::vector<IdentitySpec>& ids);

struct PresetExpectation {
  ReprTag repr;
  std::vector<ClassLabel> classes;
  PluckerPoint plucker;
  std::optional<SegrePoint> segre;
  DualityParams witness;
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<IdentitySpec> identities;
  RelationSpace space;
  PresetExpectation expected;
};

/// Names: "novikov", "associative", "poisson".
const std::vector<std::string>& preset_names();
/// Throws std::invalid_argument for an unknown name.
Preset preset(std::string_view name);

}  // namespace selfdual
