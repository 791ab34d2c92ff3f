#include "selfdual/families.hpp"
#include "selfdual/identities.hpp"
#include "selfdual/varieties.hpp"
#include "selfdual/workbench.hpp"

#include <algorithm>

namespace selfdual {

namespace {

constexpr std::uint64_t kSeed = 20240531;
constexpr int kSamples = 20;

bool generator_check(Irrep irrep) {
  Sampler s(kSeed);
  for (int k = 0; k < kSamples; ++k) {
    const Rational x1 = s.scalar();
    const Rational x2 = s.scalar();
    const std::array<Rational, 4> x{s.scalar(), s.scalar(), s.scalar(), s.scalar()};
    for (const auto& g : Perm3::all()) {
      if (irrep == Irrep::trivial && act(g, u_plus(x1, x2)) != u_plus(x1, x2)) return false;
      if (irrep == Irrep::sign && act(g, u_minus(x1, x2)) != Vector12(Rational(g.sign()) * u_minus(x1, x2))) {
        return false;
      }
      if (irrep == Irrep::standard) {
        const Matrix m = m2_table(g);
        const Vector12 v1 = u_two<Rational>(1, x);
        const Vector12 v2 = u_two<Rational>(2, x);
        if (act(g, v1) != Vector12(m(0, 0) * v1 + m(0, 1) * v2)) return false;
        if (act(g, v2) != Vector12(m(1, 0) * v1 + m(1, 1) * v2)) return false;
      }
    }
  }
  return true;
}

Claim identity_claim(IdentityTag tag, std::string statement) {
  return {to_string(tag), std::move(statement),
          [tag](const Matrix& sig, std::string&) { return verify_identity(tag, sig); }};
}

bool members_self_dual(ClassLabel label, std::string& detail) {
  Sampler s(kSeed + static_cast<std::uint64_t>(label));
  int ok = 0;
  for (int k = 0; k < kSamples; ++k) {
    const Certificate c = classify_selfdual(random_member(label, s));
    const bool member = std::find(c.classes.begin(), c.classes.end(), label) != c.classes.end();
    if (member && c.self_dual && c.verified) ++ok;
  }
  detail = std::to_string(ok) + "/" + std::to_string(kSamples) + " random points self-dual";
  if (ok < kSamples && (label == ClassLabel::X1 || label == ClassLabel::X2)) {
    detail += "; <u-(t),u+(s)> = 0 adds a(z11-z22) = -b(z12-z21), so only points also in X3 or X4 admit g(a,b)";
  }
  return ok == kSamples;
}

bool preset_claim(const std::string& name, std::string& detail) {
  const Preset p = preset(name);
  const Certificate c = classify_selfdual(p.space);
  const auto& e = p.expected;
  const bool ok = c.self_dual && c.verified && c.repr.tag == e.repr && c.classes == e.classes &&
                  c.plucker == e.plucker && c.segre == e.segre && c.witness && c.witness->a == e.witness.a &&
                  c.witness->b == e.witness.b && verify_duality(p.space, e.witness);
  if (!ok) detail = c.self_dual ? "coordinates differ from the expected ones" : c.reason;
  return ok;
}

// A concrete failure of the two-sided form: x = (1,0), y = (2,1), (a,b) = (1,2).
bool plus_minus_claim(const Matrix& sig, std::string& detail) {
  if (verify_identity(IdentityTag::plus_minus_both, sig)) return true;
  const Vector12 up = u_plus<Rational>(1, 0);
  const Vector12 um = u_minus<Rational>(2, 1);
  const Rational a(1);
  const Rational b(2);
  detail = "at x=(1,0), y=(2,1), a=1, b=2: <u+,u-> = " + to_string(pairing<Rational>(up, um, a, b, sig)) +
           ", <u-,u+> = " + to_string(pairing<Rational>(um, up, a, b, sig)) + "; the reverse order factors as " +
           symbols().format(pairing_factor(true, sig)) + " times a(x1y1-x2y2) - b(x2y1-x1y2)";
  return false;
}

bool off_locus_claim(std::string& detail) {
  Sampler s(kSeed + 100);
  for (int k = 0; k < 5; ++k) {
    const ParameterPlane plane{plane_off_y(s)};
    if (admits_duality_parameters(plane)) {
      detail = "a plane outside Y1, Y2 admits (a,b)";
      return false;
    }
    if (classify_selfdual(assemble_r34(k % 2 == 0, plane.basis)).self_dual) return false;
  }
  return true;
}

std::vector<Claim> build_catalog() {
  std::vector<Claim> c;
  c.push_back({"Sigma", "<f_i,e_j> = diag(1,-1,-1,1,-1,1,1,-1,-1,1,1,-1)",
               [](const Matrix& sig, std::string&) {
                 Matrix expected = Matrix::Zero(kArity3Dim, kArity3Dim);
                 const int d[] = {1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1};
                 for (Eigen::Index i = 0; i < kArity3Dim; ++i) expected(i, i) = d[i];
                 return sig == expected;
               }});
  c.push_back({"F3_decomposition", "F(3) = 2M+ + 2M- + 4M2", [](const Matrix&, std::string& detail) {
                 const IsotypicDecomposition d = decompose(RelationSpace::whole());
                 const auto ch = character_multiplicities(RelationSpace::whole());
                 detail = std::to_string(d.m_plus) + "," + std::to_string(d.m_minus) + "," + std::to_string(d.m_two);
                 return d.m_plus == 2 && d.m_minus == 2 && d.m_two == 4 &&
                        ch == std::array<Eigen::Index, 3>{2, 2, 4};
               }});
  c.push_back({"Generator_plus", "u+(x1,x2) spans a trivial submodule",
               [](const Matrix&, std::string&) { return generator_check(Irrep::trivial); }});
  c.push_back({"Generator_minus", "u-(x1,x2) spans a sign submodule",
               [](const Matrix&, std::string&) { return generator_check(Irrep::sign); }});
  c.push_back({"Generator_M2", "u2^1, u2^2 transform by the M2 table",
               [](const Matrix&, std::string&) { return generator_check(Irrep::standard); }});
  c.push_back(identity_claim(IdentityTag::pair_plus_plus, "<u+(x),u+(y)> = 0"));
  c.push_back(identity_claim(IdentityTag::pair_minus_minus, "<u-(x),u-(y)> = 0"));
  c.push_back(identity_claim(IdentityTag::pair_pm_two, "<u+-(x),u2^i(y)> = 0"));
  c.push_back(identity_claim(IdentityTag::pair_two_pm, "<u2^i(x),u+-(y)> = 0"));
  c.push_back(identity_claim(IdentityTag::pair_two_two, "<u2^i(x),u2^i(y)> = 0"));
  c.push_back(identity_claim(IdentityTag::plus_minus_factor,
                             "<u+(x),u-(y)> = 0 iff a(x1y1-x2y2) + b(x2y1-x1y2) = 0 when a^2 != b^2"));
  c.push_back({"PlusMinus_both_orders", "<u+(x),u-(y)> = <u-(y),u+(x)> = 0 iff a(x1y1-x2y2) + b(x2y1-x1y2) = 0 when a^2 != b^2",
               plus_minus_claim});
  c.push_back(identity_claim(IdentityTag::a_antisym, "A_ij = -A_ji"));
  c.push_back({"R1_excluded", "type R1 admits no g(a,b)",
               [](const Matrix&, std::string&) { return r1_incompatible(); }});
  for (int shape = 1; shape <= 4; ++shape) {
    c.push_back({"R2_excluded_shape" + std::to_string(shape), "type R2 normal form " + std::to_string(shape) +
                                                                   " gives an improper ideal",
                 [shape](const Matrix&, std::string&) { return r2_shape_incompatible(shape); }});
  }
  c.push_back({"Case1", "case 1 reduces to the five expected t-polynomials",
               [](const Matrix&, std::string& detail) {
                 const Case1Report r = solve_case1();
                 detail = std::to_string(r.basis.size()) + " basis elements, " + std::to_string(r.t_only.size()) +
                          " in t only";
                 return r.ok();
               }});
  c.push_back({"Case2", "case 2 yields the (U1)/(U2) points t3 = 1 / t3 = -1",
               [](const Matrix&, std::string&) { return solve_case2(); }});
  c.push_back({"Case3", "case 3 yields the (U1)/(U2) points t3 = 1 / t3 = -1",
               [](const Matrix&, std::string&) { return solve_case3(); }});
  c.push_back({"Case4", "case 4 has no solutions",
               [](const Matrix&, std::string&) { return solve_case4(); }});
  c.push_back(identity_claim(IdentityTag::u1_annihilates, "(U1) satisfies U A12 U^T = 0 for all a, b"));
  c.push_back(identity_claim(IdentityTag::u2_annihilates, "(U2) satisfies U A12 U^T = 0 for all a, b"));
  c.push_back(identity_claim(IdentityTag::u3_b0, "at b = 0 the condition is x1y3 - x3y1 + x4y2 - x2y4 = 0"));
  c.push_back(identity_claim(IdentityTag::u4_a0,
                             "at a = 0 the condition is x2y1 - x1y2 + x3y2 - x2y3 + x1y4 - x4y1 = 0"));
  c.push_back(identity_claim(IdentityTag::plucker_u1, "(U1) planes: p12 = 0, p13 = p14 = p23 = p24"));
  c.push_back(identity_claim(IdentityTag::plucker_u2,
                             "(U2) planes: p13 = p24, p14 + p23 + 2p13 = 0, p12 = 4p34, p14 = p23 + p12"));
  c.push_back(identity_claim(IdentityTag::plucker_u3, "(U3) condition is p13 = p24"));
  c.push_back(identity_claim(IdentityTag::plucker_u4, "(U4) condition is p14 = p12 + p23"));
  c.push_back({"Selfdual_Y1", "2M+-+2M2 with p(U) in Y1 is self-dual",
               [](const Matrix&, std::string& d) { return members_self_dual(ClassLabel::Y1, d); }});
  c.push_back({"Selfdual_Y2", "2M+-+2M2 with p(U) in Y2 is self-dual",
               [](const Matrix&, std::string& d) { return members_self_dual(ClassLabel::Y2, d); }});
  c.push_back({"Selfdual_Y_only_if", "2M+-+2M2 with p(U) outside Y1, Y2 is not self-dual",
               [](const Matrix&, std::string& d) { return off_locus_claim(d); }});
  for (auto label : {ClassLabel::X1, ClassLabel::X2, ClassLabel::X3, ClassLabel::X4}) {
    c.push_back({"Selfdual_" + to_string(label), "M+ + M- + 2M2 with q(U) in " + to_string(label) + " is self-dual",
                 [label](const Matrix&, std::string& d) { return members_self_dual(label, d); }});
  }
  c.push_back({"Example_novikov", "Novikov: p = (-1,0,1,2,3,2) in Y2",
               [](const Matrix&, std::string& d) { return preset_claim("novikov", d); }});
  c.push_back({"Example_associative", "associative: p = (1,1,1,0,1,1), z = (1,-1,-1,1) in X3 and X4",
               [](const Matrix&, std::string& d) { return preset_claim("associative", d); }});
  c.push_back({"Example_poisson", "Poisson: p = (0,1,1,1,1,1), z = (1,-1,-1,1) in X3 and X4",
               [](const Matrix&, std::string& d) { return preset_claim("poisson", d); }});
  return c;
}

}  // namespace

const std::vector<Claim>& claim_catalog() {
  static const std::vector<Claim> catalog = build_catalog();
  return catalog;
}

std::vector<ClaimResult> run_claims(const Matrix& sigma_matrix) {
  std::vector<ClaimResult> out;
  for (const auto& claim : claim_catalog()) {
    ClaimResult r{claim.id, claim.statement, false, {}};
    try {
      r.passed = claim.check(sigma_matrix, r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace selfdual
