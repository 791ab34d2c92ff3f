#include "selfdual/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfdual {

namespace {

using PolyMatrix = MatrixX<Polynomial>;
using PolyVector = RowVector12<Polynomial>;

// Most significant first: c > inverses > a, b > everything else > t's.
const std::vector<std::string>& symbol_names() {
  static const std::vector<std::string> names{
      "c",  "w",  "ai", "bi", "a",  "b",  "g",  "s1", "s2", "r1", "r2", "d1", "d2", "x1",
      "x2", "x3", "x4", "y1", "y2", "y3", "y4", "t1", "t2", "t3", "t4"};
  return names;
}

MonomialOrder default_order() {
  std::vector<Var> priority;
  for (const auto& n : symbol_names()) priority.push_back(*symbols().find(n));
  return MonomialOrder::degrevlex(priority);
}

MonomialOrder elimination_order() {
  std::vector<Var> priority;
  for (const auto& n : symbol_names()) priority.push_back(*symbols().find(n));
  return MonomialOrder::lex(priority);
}

Polynomial S(std::string_view name) { return symbol(name); }

std::array<Polynomial, 4> xs() { return {S("x1"), S("x2"), S("x3"), S("x4")}; }
std::array<Polynomial, 4> ys() { return {S("y1"), S("y2"), S("y3"), S("y4")}; }

PolyMatrix poly(const Matrix& m) { return m.cast<Polynomial>(); }

Polynomial pair(const PolyVector& u, const PolyVector& v, const Matrix& sigma_matrix) {
  return pairing<Polynomial>(u, v, S("a"), S("b"), poly(sigma_matrix));
}

PolyVector u_pm(int sign, const Polynomial& x1, const Polynomial& x2) {
  return sign > 0 ? u_plus<Polynomial>(x1, x2) : u_minus<Polynomial>(x1, x2);
}

bool all_zero(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Polynomial> entries(const PolyMatrix& m) {
  std::vector<Polynomial> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && std::find(out.begin(), out.end(), m(i, j)) == out.end()) out.push_back(m(i, j));
  return out;
}

PolyMatrix a12(const Polynomial& a, const Polynomial& b, const Matrix& sigma_matrix) {
  return a_matrix<Polynomial>(1, 2, a, b, poly(sigma_matrix));
}

PolyMatrix rows2(const std::array<Polynomial, 4>& x, const std::array<Polynomial, 4>& y) {
  PolyMatrix m(2, 4);
  m << x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3];
  return m;
}

PolyMatrix rows2(std::initializer_list<Polynomial> x, std::initializer_list<Polynomial> y) {
  std::array<Polynomial, 4> xa;
  std::array<Polynomial, 4> ya;
  std::copy(x.begin(), x.end(), xa.begin());
  std::copy(y.begin(), y.end(), ya.begin());
  return rows2(xa, ya);
}

// p12, p13, p14, p23, p24, p34 of a symbolic 2x4 matrix.
std::array<Polynomial, 6> plucker_polys(const PolyMatrix& m) {
  auto minor = [&](int i, int j) { return m(0, i) * m(1, j) - m(0, j) * m(1, i); };
  return {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
}

Polynomial u3_constraint() {
  return S("x1") * S("y3") - S("x3") * S("y1") + S("x4") * S("y2") - S("x2") * S("y4");
}

Polynomial u4_constraint() {
  return S("x2") * S("y1") - S("x1") * S("y2") + S("x3") * S("y2") - S("x2") * S("y3") +
         S("x1") * S("y4") - S("x4") * S("y1");
}

Polynomial nondegeneracy() { return (S("a") * S("a") - S("b") * S("b")) * S("c") - 1; }

bool pairing_family(IdentityTag tag, const Matrix& sig) {
  const auto x = xs();
  const auto y = ys();
  std::vector<Polynomial> values;
  switch (tag) {
    case IdentityTag::pair_plus_plus:
      values.push_back(pair(u_pm(1, x[0], x[1]), u_pm(1, y[0], y[1]), sig));
      break;
    case IdentityTag::pair_minus_minus:
      values.push_back(pair(u_pm(-1, x[0], x[1]), u_pm(-1, y[0], y[1]), sig));
      break;
    case IdentityTag::pair_pm_two:
      for (int sign : {1, -1})
        for (int i : {1, 2}) values.push_back(pair(u_pm(sign, x[0], x[1]), u_two<Polynomial>(i, y), sig));
      break;
    case IdentityTag::pair_two_pm:
      for (int sign : {1, -1})
        for (int i : {1, 2}) values.push_back(pair(u_two<Polynomial>(i, x), u_pm(sign, y[0], y[1]), sig));
      break;
    case IdentityTag::pair_two_two:
      for (int i : {1, 2}) values.push_back(pair(u_two<Polynomial>(i, x), u_two<Polynomial>(i, y), sig));
      break;
    default:
      throw std::logic_error("pairing_family: not a pairing-family tag");
  }
  return all_zero(values);
}

bool plus_minus_nonvanishing(const Polynomial& factor) {
  if (factor.is_zero()) return false;
  for (Var v : factor.variables()) {
    const auto& n = symbols().name(v);
    if (n != "a" && n != "b") return false;
  }
  // The factor must not vanish anywhere off a^2 = b^2.
  const Polynomial off_diagonal = (S("a") * S("a") - S("b") * S("b")) * S("w") - 1;
  return ideal_is_trivial({factor, off_diagonal}, default_order());
}

bool plus_minus_factor_holds(const Matrix& sig) {
  try {
    return plus_minus_nonvanishing(pairing_factor(false, sig));
  } catch (const std::logic_error&) {
    return false;
  }
}

// Both orders vanish on the same locus as the forward form only if the
// reverse pairing is a nonvanishing multiple of that same form.
bool plus_minus_both_holds(const Matrix& sig) {
  if (!plus_minus_factor_holds(sig)) return false;
  const auto x = xs();
  const auto y = ys();
  const Polynomial reverse = pair(u_pm(-1, y[0], y[1]), u_pm(1, x[0], x[1]), sig);
  const Polynomial form =
      S("a") * (x[0] * y[0] - x[1] * y[1]) + S("b") * (x[1] * y[0] - x[0] * y[1]);
  const Division d = divide(reverse, form, default_order());
  return d.remainder.is_zero() && plus_minus_nonvanishing(d.quotient);
}

bool a_antisym(const Matrix& sig) {
  const Polynomial a = S("a");
  const Polynomial b = S("b");
  const PolyMatrix a11 = a_matrix<Polynomial>(1, 1, a, b, poly(sig));
  const PolyMatrix a22 = a_matrix<Polynomial>(2, 2, a, b, poly(sig));
  const PolyMatrix a12m = a_matrix<Polynomial>(1, 2, a, b, poly(sig));
  const PolyMatrix a21m = a_matrix<Polynomial>(2, 1, a, b, poly(sig));
  return is_zero(a11) && is_zero(a22) && is_zero(PolyMatrix(a12m + a21m));
}

bool a12_skew(const Matrix& sig) {
  const PolyMatrix m = a12(S("a"), S("b"), sig);
  const PolyMatrix sym = m + m.transpose();
  const std::vector<Polynomial> ab{S("a") * S("b")};
  const auto order = default_order();
  for (const auto& e : entries(sym))
    if (!reduce(e, ab, order).is_zero()) return false;
  return true;
}

bool annihilates_all(const std::vector<PolyMatrix>& planes, const Matrix& sig) {
  for (const auto& u : planes)
    if (!all_zero(orthogonality_equations(u, sig))) return false;
  return true;
}

// At b = 0 (or a = 0) the equations are multiples of the linear constraint,
// and with a (or b) invertible they generate exactly its ideal.
bool constraint_equivalence(const Polynomial& a, const Polynomial& b, const Polynomial& unit,
                            const Polynomial& constraint, const Matrix& sig) {
  const PolyMatrix u = rows2(xs(), ys());
  const PolyMatrix m = u * a12(a, b, sig) * u.transpose();
  const auto eqs = entries(m);
  const auto order = default_order();
  for (const auto& e : eqs)
    if (!reduce(e, {constraint}, order).is_zero()) return false;
  if (eqs.empty()) return false;
  std::vector<Polynomial> gens = eqs;
  gens.push_back(unit);
  return reduce(constraint, groebner(gens, order), order).is_zero();
}

bool plucker_family(IdentityTag tag) {
  const Polynomial g = S("g");
  const Polynomial zero(0);
  const Polynomial one(1);
  if (tag == IdentityTag::plucker_u1 || tag == IdentityTag::plucker_u2) {
    std::vector<PolyMatrix> planes;
    if (tag == IdentityTag::plucker_u1) {
      planes = {rows2({g, g, zero, one}, {-g, -g, one, zero}),
                rows2({zero, zero, one, one}, {one, one, zero, zero})};
    } else {
      planes = {rows2({-g, g + 2, zero, one}, {2 - g, g, one, zero}),
                rows2({zero, zero, -one, one}, {-one, one, zero, zero})};
    }
    for (const auto& m : planes) {
      const auto [p12, p13, p14, p23, p24, p34] = plucker_polys(m);
      std::vector<Polynomial> eqs;
      if (tag == IdentityTag::plucker_u1) {
        eqs = {p12, p13 - p14, p14 - p23, p23 - p24};
      } else {
        eqs = {p13 - p24, p14 + p23 + 2 * p13, p12 - 4 * p34, p14 - p23 - p12};
      }
      if (!all_zero(eqs)) return false;
      // Rank 2 throughout the family: some minor is a nonzero constant.
      const std::array<Polynomial, 6> minors{p12, p13, p14, p23, p24, p34};
      if (std::none_of(minors.begin(), minors.end(),
                       [](const Polynomial& p) { return p.is_constant() && !p.is_zero(); }))
        return false;
    }
    return true;
  }
  const auto [p12, p13, p14, p23, p24, p34] = plucker_polys(rows2(xs(), ys()));
  if (tag == IdentityTag::plucker_u3) return u3_constraint() == p13 - p24;
  return u4_constraint() == p14 - p12 - p23;
}

bool witness_nondegenerate() {
  const Polynomial z11 = S("s1") * S("r1");
  const Polynomial z12 = S("s1") * S("r2");
  const Polynomial z21 = S("s2") * S("r1");
  const Polynomial z22 = S("s2") * S("r2");
  const Polynomial d1 = z11 - z22;
  const Polynomial d2 = z12 - z21;
  return d2 * d2 - d1 * d1 == z12 * z12 + z21 * z21 - z11 * z11 - z22 * z22 &&
         (z11 * z22 - z12 * z21).is_zero();
}

std::vector<Polynomial> t_only(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> out;
  for (const auto& p : basis) {
    bool only_t = true;
    for (Var v : p.variables()) only_t = only_t && symbols().name(v)[0] == 't';
    if (only_t) out.push_back(p);
  }
  return out;
}

std::vector<Polynomial> localized_system(const PolyMatrix& u_hat) {
  auto eqs = orthogonality_equations(u_hat);
  eqs.push_back(S("a") * S("ai") - 1);
  eqs.push_back(S("b") * S("bi") - 1);
  eqs.push_back(nondegeneracy());
  return eqs;
}

bool same_ideal(const std::vector<Polynomial>& lhs, const std::vector<Polynomial>& rhs,
                const MonomialOrder& order) {
  return ideal_contains(groebner(lhs, order), rhs, order) && ideal_contains(groebner(rhs, order), lhs, order);
}

// Cases 2 and 3: the t-part of the localized ideal is <t1, t2 - t3, t3^2 - 1>
// and the two solutions are (U1)/(U2) planes.
bool boundary_case(const PolyMatrix& shape) {
  const auto order = elimination_order();
  const auto basis = groebner(localized_system(shape), order);
  const std::vector<Polynomial> expected{S("t1"), S("t2") - S("t3"), S("t3") * S("t3") - 1};
  if (!same_ideal(t_only(basis), expected, order)) return false;
  for (int sign : {1, -1}) {
    Matrix plane(2, 4);
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        Polynomial e = shape(i, j);
        e = e.substitute(*symbols().find("t1"), Polynomial(0));
        e = e.substitute(*symbols().find("t2"), Polynomial(sign));
        e = e.substitute(*symbols().find("t3"), Polynomial(sign));
        if (!e.is_constant()) return false;
        plane(i, j) = e.coefficient(Monomial());
      }
    }
    const PlaneLoci loci = plane_loci(plucker(ParameterPlane{rowspace_basis(plane)}));
    if (sign > 0 ? !loci.u1 : !loci.u2) return false;
    if (!all_zero(orthogonality_equations(poly(plane)))) return false;
  }
  return true;
}

}  // namespace

const VariableNames& symbols() {
  static const VariableNames table(symbol_names());
  return table;
}

Polynomial symbol(std::string_view name) {
  const auto v = symbols().find(name);
  if (!v) throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
  return Polynomial::variable(*v);
}

const std::vector<IdentityTag>& all_identity_tags() {
  static const std::vector<IdentityTag> tags{
      IdentityTag::pair_plus_plus,       IdentityTag::pair_minus_minus,       IdentityTag::pair_pm_two,
      IdentityTag::pair_two_pm,       IdentityTag::pair_two_two,       IdentityTag::plus_minus_factor, IdentityTag::plus_minus_both,
      IdentityTag::a_antisym,      IdentityTag::a12_skew,       IdentityTag::u1_annihilates,
      IdentityTag::u2_annihilates, IdentityTag::u3_b0,          IdentityTag::u4_a0,
      IdentityTag::plucker_u1,     IdentityTag::plucker_u2,     IdentityTag::plucker_u3,
      IdentityTag::plucker_u4,     IdentityTag::witness_nondegenerate};
  return tags;
}

std::string to_string(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::pair_plus_plus: return "Pairing_plus_plus";
    case IdentityTag::pair_minus_minus: return "Pairing_minus_minus";
    case IdentityTag::pair_pm_two: return "Pairing_pm_two";
    case IdentityTag::pair_two_pm: return "Pairing_two_pm";
    case IdentityTag::pair_two_two: return "Pairing_two_two";
    case IdentityTag::plus_minus_factor: return "PlusMinus_factor";
    case IdentityTag::plus_minus_both: return "PlusMinus_both_orders";
    case IdentityTag::a_antisym: return "A_antisym";
    case IdentityTag::a12_skew: return "A12_skew";
    case IdentityTag::u1_annihilates: return "U1_annihilates";
    case IdentityTag::u2_annihilates: return "U2_annihilates";
    case IdentityTag::u3_b0: return "U3_b0";
    case IdentityTag::u4_a0: return "U4_a0";
    case IdentityTag::plucker_u1: return "Plucker_U1";
    case IdentityTag::plucker_u2: return "Plucker_U2";
    case IdentityTag::plucker_u3: return "Plucker_U3";
    case IdentityTag::plucker_u4: return "Plucker_U4";
    case IdentityTag::witness_nondegenerate: return "Witness_nondegenerate";
  }
  throw std::logic_error("to_string: unknown identity tag");
}

std::optional<IdentityTag> parse_identity_tag(std::string_view text) {
  for (auto tag : all_identity_tags())
    if (to_string(tag) == text) return tag;
  return std::nullopt;
}

bool verify_identity(IdentityTag tag, const Matrix& sigma_matrix) {
  const Polynomial a = S("a");
  const Polynomial b = S("b");
  const Polynomial g = S("g");
  const Polynomial zero(0);
  const Polynomial one(1);
  switch (tag) {
    case IdentityTag::pair_plus_plus:
    case IdentityTag::pair_minus_minus:
    case IdentityTag::pair_pm_two:
    case IdentityTag::pair_two_pm:
    case IdentityTag::pair_two_two:
      return pairing_family(tag, sigma_matrix);
    case IdentityTag::plus_minus_factor:
      return plus_minus_factor_holds(sigma_matrix);
    case IdentityTag::plus_minus_both:
      return plus_minus_both_holds(sigma_matrix);
    case IdentityTag::a_antisym:
      return a_antisym(sigma_matrix);
    case IdentityTag::a12_skew:
      return a12_skew(sigma_matrix);
    case IdentityTag::u1_annihilates:
      return annihilates_all({rows2({g, g, zero, one}, {-g, -g, one, zero}),
                              rows2({zero, zero, one, one}, {one, one, zero, zero})},
                             sigma_matrix);
    case IdentityTag::u2_annihilates:
      return annihilates_all({rows2({-g, g + 2, zero, one}, {2 - g, g, one, zero}),
                              rows2({zero, zero, -one, one}, {-one, one, zero, zero})},
                             sigma_matrix);
    case IdentityTag::u3_b0:
      return constraint_equivalence(a, zero, a * S("ai") - 1, u3_constraint(), sigma_matrix);
    case IdentityTag::u4_a0:
      return constraint_equivalence(zero, b, b * S("bi") - 1, u4_constraint(), sigma_matrix);
    case IdentityTag::plucker_u1:
    case IdentityTag::plucker_u2:
    case IdentityTag::plucker_u3:
    case IdentityTag::plucker_u4:
      return plucker_family(tag);
    case IdentityTag::witness_nondegenerate:
      return witness_nondegenerate();
  }
  throw std::invalid_argument("verify_identity: unknown tag");
}

Polynomial pairing_factor(bool minus_first, const Matrix& sigma_matrix) {
  const auto x = xs();
  const auto y = ys();
  const PolyVector up = u_pm(1, x[0], x[1]);
  const PolyVector um = u_pm(-1, y[0], y[1]);
  const Polynomial value = minus_first ? pair(um, up, sigma_matrix) : pair(up, um, sigma_matrix);
  const Polynomial a = S("a");
  // Swapping the arguments turns the bilinear form into its b -> -b mirror.
  const Polynomial b = minus_first ? Polynomial(-S("b")) : S("b");
  const Polynomial form = a * (x[0] * y[0] - x[1] * y[1]) + b * (x[1] * y[0] - x[0] * y[1]);
  const Division d = divide(value, form, default_order());
  if (!d.remainder.is_zero()) throw std::logic_error("pairing_factor: pairing is not a multiple of the form");
  return d.quotient;
}

std::vector<Polynomial> orthogonality_equations(const PolyMatrix& u_hat, const Matrix& sigma_matrix) {
  const PolyMatrix m = u_hat * a12(S("a"), S("b"), sigma_matrix) * u_hat.transpose();
  return entries(m);
}

std::vector<Polynomial> r2_system(int shape) {
  const Polynomial t1 = S("t1");
  const Polynomial t2 = S("t2");
  const Polynomial t3 = S("t3");
  const Polynomial o(1);
  const Polynomial z(0);
  PolyMatrix u(3, 4);
  switch (shape) {
    case 1: u << t1, o, z, z, t2, z, o, z, t3, z, z, o; break;
    case 2: u << o, t1, z, z, z, t2, o, z, z, t3, z, o; break;
    case 3: u << o, z, t1, z, z, o, t2, z, z, z, t3, o; break;
    case 4: u << o, z, z, t1, z, o, z, t2, z, z, o, t3; break;
    default: throw std::invalid_argument("r2_system: shape must be 1..4");
  }
  auto eqs = orthogonality_equations(u);
  eqs.push_back(nondegeneracy());
  return eqs;
}

bool r2_shape_incompatible(int shape) { return ideal_is_trivial(r2_system(shape), default_order()); }

bool r1_incompatible() {
  std::vector<Polynomial> eqs;
  const std::array<std::array<Polynomial, 2>, 2> units{{{Polynomial(1), Polynomial(0)}, {Polynomial(0), Polynomial(1)}}};
  for (const auto& x : units) {
    for (const auto& y : units) {
      const PolyVector up = u_pm(1, x[0], x[1]);
      const PolyVector um = u_pm(-1, y[0], y[1]);
      eqs.push_back(pair(up, um, sigma()));
      eqs.push_back(pair(um, up, sigma()));
    }
  }
  eqs.push_back(nondegeneracy());
  return ideal_is_trivial(eqs, default_order());
}

Case1Report solve_case1() {
  const Polynomial t1 = S("t1");
  const Polynomial t2 = S("t2");
  const Polynomial t3 = S("t3");
  const Polynomial t4 = S("t4");
  const auto order = elimination_order();
  Case1Report report;
  report.basis = groebner(localized_system(rows2({t1, t2, Polynomial(0), Polynomial(1)},
                                                 {t3, t4, Polynomial(1), Polynomial(0)})),
                          order);
  report.t_only = t_only(report.basis);
  report.expected = {t3 * t3 - t4 * t4 - 2 * t3 + 2 * t4, t2 * t2 - t1 * t1 + 2 * t1 - 2 * t2,
                      t2 * t4 + t3 * t4 - t2 + t3 - 2 * t4, t2 * t3 + t4 * t4 - t2 - t3, t1 + t4};
  report.expected_in_ideal = ideal_contains(report.basis, report.expected, order);
  report.t_part_in_expected_ideal = ideal_contains(groebner(report.expected, order), report.t_only, order);
  report.factorizations_hold = (t3 - t4) * (t3 + t4 - 2) == report.expected[0] &&
                               (t2 - t1) * (t2 + t1 - 2) == report.expected[1];
  report.buchberger_criterion = satisfies_buchberger_criterion(report.basis, order);
  return report;
}

bool solve_case2() {
  const Polynomial o(1);
  const Polynomial z(0);
  return boundary_case(rows2({S("t1"), z, S("t2"), o}, {S("t3"), o, z, z}));
}

bool solve_case3() {
  const Polynomial o(1);
  const Polynomial z(0);
  const Polynomial t1 = S("t1");
  const Polynomial t2 = S("t2");
  const Polynomial t3 = S("t3");
  return boundary_case(rows2({z, t1, t2, o}, {o, t3, z, z})) &&
         boundary_case(rows2({t1, z, o, t2}, {t3, o, z, z})) &&
         boundary_case(rows2({z, t1, o, t2}, {o, t3, z, z}));
}

bool solve_case4() {
  const Polynomial o(1);
  const Polynomial z(0);
  return ideal_is_trivial(localized_system(rows2({z, o, z, z}, {o, z, z, z})), default_order());
}

bool admits_duality_parameters(const ParameterPlane& plane) {
  auto eqs = orthogonality_equations(poly(plane.basis));
  if (eqs.empty()) return true;
  eqs.push_back(nondegeneracy());
  return !ideal_is_trivial(eqs, default_order());
}

}  // namespace selfdual
