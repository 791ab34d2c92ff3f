#pragma once

// Symbolic replay of the polynomial identities and Groebner-basis facts behind
// the classification. Everything is expanded exactly over Q[x, y, a, b, ...].

#include "selfdual/classify.hpp"
#include "selfdual/groebner.hpp"
#include "selfdual/polynomial.hpp"
#include "selfdual/rep_theory.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfdual {

/// Shared symbol table: a, b, c, ai, bi, g (gamma), w, x1..x4, y1..y4,
/// t1..t4, s1, s2, r1, r2 (second Segre line), d1, d2.
const VariableNames& symbols();
/// The named indeterminate; throws std::invalid_argument for unknown names.
Polynomial symbol(std::string_view name);

enum class IdentityTag {
  pair_plus_plus,        // <u+(x), u+(y)> = 0
  pair_minus_minus,        // <u-(x), u-(y)> = 0
  pair_pm_two,        // <u+-(x), u2^i(y)> = 0
  pair_two_pm,        // <u2^i(x), u+-(y)> = 0
  pair_two_two,        // <u2^i(x), u2^i(y)> = 0
  plus_minus_factor,  // <u+(x), u-(y)> = c(a,b) (a(x1y1 - x2y2) + b(x2y1 - x1y2)), c != 0 off a^2 = b^2
  plus_minus_both,          // <u+(x), u-(y)> = <u-(y), u+(x)> = 0 iff a(x1y1 - x2y2) + b(x2y1 - x1y2) = 0
  a_antisym,       // A11 = A22 = 0, A12 = -A21
  a12_skew,        // A12 + A12^T = 0 whenever ab = 0
  u1_annihilates,  // (U1) matrices satisfy U A12 U^T = 0 for all a, b
  u2_annihilates,  // (U2) likewise
  u3_b0,           // at b = 0, U A12 U^T = 0 iff x1y3 - x3y1 + x4y2 - x2y4 = 0
  u4_a0,           // at a = 0, U A12 U^T = 0 iff x2y1 - x1y2 + x3y2 - x2y3 + x1y4 - x4y1 = 0
  plucker_u1,      // (U1) planes satisfy p12 = 0, p13 = p14 = p23 = p24
  plucker_u2,      // (U2) planes satisfy its four linear equations
  plucker_u3,      // the (U3) constraint equals p13 - p24
  plucker_u4,      // the (U4) constraint equals p14 - p12 - p23
  witness_nondegenerate,  // (z12-z21)^2 - (z11-z22)^2 = z12^2 + z21^2 - z11^2 - z22^2 on S(1,1)
};

const std::vector<IdentityTag>& all_identity_tags();
std::string to_string(IdentityTag tag);
std::optional<IdentityTag> parse_identity_tag(std::string_view text);

/// Builds the claim symbolically and checks it as a polynomial identity. The
/// pairing uses `sigma_matrix`, so a modified Sigma can be audited.
bool verify_identity(IdentityTag tag, const Matrix& sigma_matrix = sigma());

/// The factor c(a,b) with <u+(x), u-(y)> = c(a,b) (a(x1y1 - x2y2) + b(x2y1 - x1y2))
/// or, when `minus_first`, <u-(y), u+(x)> = c(a,b) (a(x1y1 - x2y2) - b(x2y1 - x1y2)). Throws std::logic_error if the
/// pairing is not such a multiple.
Polynomial pairing_factor(bool minus_first = false, const Matrix& sigma_matrix = sigma());

/// Entries of U_hat A12(a,b) U_hat^T for a symbolic parameter matrix.
std::vector<Polynomial> orthogonality_equations(const MatrixX<Polynomial>& u_hat,
                                                const Matrix& sigma_matrix = sigma());

/// The four 3x4 normal forms of a rank-3 parameter space (shape 1..4), each
/// system augmented with (a^2 - b^2) c - 1.
std::vector<Polynomial> r2_system(int shape);
bool r2_shape_incompatible(int shape);

/// Type R1 contains u+(x) and u-(y) for all x, y; the resulting equations with
/// (a^2 - b^2) c - 1 generate the unit ideal.
bool r1_incompatible();

struct Case1Report {
  std::vector<Polynomial> basis;            // lex, c > ai > bi > a > b > t1 > ... > t4
  std::vector<Polynomial> t_only;           // elements free of a, b, ai, bi, c
  std::vector<Polynomial> expected;         // the five t-polynomials
  bool expected_in_ideal = false;           // expected reduce to 0 modulo basis
  bool t_part_in_expected_ideal = false;    // t_only reduce to 0 modulo GB(expected)
  bool factorizations_hold = false;         // the first two factor into linear forms
  bool buchberger_criterion = false;
  bool ok() const {
    return expected_in_ideal && t_part_in_expected_ideal && factorizations_hold && buchberger_criterion;
  }
};

/// Generic 2x4 case [[t1, t2, 0, 1], [t3, t4, 1, 0]] with a, b invertible and a^2 != b^2.
Case1Report solve_case1();

/// Cases 2 and 3 (t4 = 0) have exactly the solutions t1 = 0, t2 = t3 = +-1,
/// which are (U1) planes for +1 and (U2) planes for -1; case 4 has none.
bool solve_case2();
bool solve_case3();
bool solve_case4();

/// Whether some (a, b) with a^2 != b^2 (over an algebraic closure) solves
/// U_hat A12(a,b) U_hat^T = 0.
bool admits_duality_parameters(const ParameterPlane& plane);

}  // namespace selfdual
