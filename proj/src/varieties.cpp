#include "selfdual/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace selfdual {

namespace {

// Variable order of the monomial mu_outer(mu_inner(v1, v2), v3).
Monomial3 tree_monomial(bool outer_twisted, bool inner_twisted, const std::array<int, 3>& v) {
  const std::array<int, 2> inner = inner_twisted ? std::array<int, 2>{v[1], v[0]}
                                                 : std::array<int, 2>{v[0], v[1]};
  if (!outer_twisted) return {Bracketing::left, {inner[0], inner[1], v[2]}};
  return {Bracketing::right, {v[2], inner[0], inner[1]}};
}

const std::array<Monomial3, 12>& dictionary() {
  static const std::array<Monomial3, 12> table = [] {
    std::array<Monomial3, 12> t{};
    const std::array<Perm3, 3> reps{Perm3(), Perm3({3, 2, 1}), Perm3({1, 3, 2})};
    for (std::size_t c = 0; c < 3; ++c) {
      // Substituting x_k -> x_{g(k)}.
      const std::array<int, 3> v{reps[c](1), reps[c](2), reps[c](3)};
      for (std::size_t w = 0; w < 4; ++w) t[4 * c + w] = tree_monomial(w >= 2, w % 2 == 1, v);
    }
    return t;
  }();
  return table;
}

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  std::vector<IdentitySpec> parse() {
    std::vector<IdentitySpec> out;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      out.push_back(parse_identity());
      skip_ws();
      if (!at_end()) expect(';');
    }
    if (out.empty()) fail("no identities given");
    return out;
  }

 private:
  IdentitySpec parse_identity() {
    IdentitySpec id;
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ';') break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Rational coefficient = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = parse_number();
      } else if (!at_end() && peek() == '(' && coefficient_paren()) {
        ++pos_;
        skip_ws();
        coefficient = parse_number();
        skip_ws();
        expect(')');
      }
      skip_ws();
      id.terms.push_back({sign * coefficient, parse_monomial()});
      first = false;
    }
    if (id.terms.empty()) fail("empty identity");
    return id;
  }

  bool coefficient_paren() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '-');
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.column());
    }
  }

  int parse_variable() {
    skip_ws();
    expect('x');
    if (at_end() || peek() < '1' || peek() > '3') fail("expected variable x1, x2 or x3");
    return peek_advance() - '0';
  }

  Monomial3 parse_monomial() {
    Monomial3 m;
    if (!at_end() && peek() == '(') {
      ++pos_;
      const int a = parse_variable();
      const int b = parse_variable();
      skip_ws();
      expect(')');
      const int c = parse_variable();
      m = {Bracketing::left, {a, b, c}};
    } else {
      const int a = parse_variable();
      skip_ws();
      expect('(');
      const int b = parse_variable();
      const int c = parse_variable();
      skip_ws();
      expect(')');
      m = {Bracketing::right, {a, b, c}};
    }
    std::array<int, 3> sorted = m.vars;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) fail("each of x1, x2, x3 must occur exactly once");
    return m;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }
  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek_advance() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

IdentitySpec identity(std::initializer_list<std::pair<int, Monomial3>> terms) {
  IdentitySpec id;
  for (const auto& [c, m] : terms) id.terms.push_back({Rational(c), m});
  return id;
}

Monomial3 L(int a, int b, int c) { return {Bracketing::left, {a, b, c}}; }
Monomial3 R(int a, int b, int c) { return {Bracketing::right, {a, b, c}}; }

}  // namespace

std::string Monomial3::to_string() const {
  const auto x = [&](std::size_t k) { return "x" + std::to_string(vars[k]); };
  if (shape == Bracketing::left) return "(" + x(0) + " " + x(1) + ")" + x(2);
  return x(0) + "(" + x(1) + " " + x(2) + ")";
}

Eigen::Index basis_index(const Monomial3& m) {
  const auto& table = dictionary();
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] == m) return static_cast<Eigen::Index>(k);
  throw std::invalid_argument("basis_index: not a multilinear monomial in x1, x2, x3");
}

Monomial3 basis_monomial(Eigen::Index index) {
  if (index < 0 || index >= kArity3Dim) throw std::out_of_range("basis_monomial: index out of range");
  return dictionary()[static_cast<std::size_t>(index)];
}

Vector12 IdentitySpec::to_vector() const {
  Vector12 v = Vector12::Constant(Rational(0));
  for (const auto& t : terms) v(basis_index(t.monomial)) += t.coefficient;
  return v;
}

std::string IdentitySpec::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = negative ? Rational(-t.coefficient) : t.coefficient;
    out += negative ? "-" : "+";
    if (magnitude != 1) out += "(" + selfdual::to_string(magnitude) + ")";
    out += t.monomial.to_string();
  }
  return out;
}

std::vector<IdentitySpec> parse_identities(std::string_view text) { return IdentityParser(text).parse(); }

RelationSpace encode(const std::vector<IdentitySpec>& ids) {
  if (ids.empty()) throw std::invalid_argument("encode: no identities");
  Matrix rows(static_cast<Eigen::Index>(ids.size()), kArity3Dim);
  for (std::size_t k = 0; k < ids.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = ids[k].to_vector();
  if (is_zero(rows)) throw std::invalid_argument("encode: identities encode to zero");
  return s3_closure(rows);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"novikov", "associative", "poisson"};
  return names;
}

Preset preset(std::string_view name) {
  Preset p;
  p.name = std::string(name);
  if (name == "novikov") {
    p.description = "left Novikov: right-symmetric associator, left commutative";
    p.identities = {
        identity({{1, L(1, 2, 3)}, {-1, R(1, 2, 3)}, {-1, L(1, 3, 2)}, {1, R(1, 3, 2)}}),
        identity({{1, R(1, 2, 3)}, {-1, R(2, 1, 3)}})};
    p.expected = {ReprTag::R4,
                  {ClassLabel::Y2},
                  PluckerPoint({-1, 0, 1, 2, 3, 2}),
                  std::nullopt,
                  {0, 1}};
  } else if (name == "associative") {
    p.description = "associative: (x1x2)x3 = x1(x2x3)";
    p.identities = {identity({{1, L(1, 2, 3)}, {-1, R(1, 2, 3)}})};
    p.expected = {ReprTag::R5,
                  {ClassLabel::X3, ClassLabel::X4},
                  PluckerPoint({1, 1, 1, 0, 1, 1}),
                  SegrePoint({1, -1, -1, 1}),
                  {1, 0}};
  } else if (name == "poisson") {
    // x.y = xy + {x,y}: 3(xy)z = 3x(yz) - (yx)z + (yz)x + (xz)y - (zx)y.
    p.description = "Poisson in one operation x.y = xy + {x,y}";
    p.identities = {identity({{3, L(1, 2, 3)},
                              {-3, R(1, 2, 3)},
                              {1, L(2, 1, 3)},
                              {-1, L(2, 3, 1)},
                              {-1, L(1, 3, 2)},
                              {1, L(3, 1, 2)}})};
    p.expected = {ReprTag::R5,
                  {ClassLabel::X3, ClassLabel::X4},
                  PluckerPoint({0, 1, 1, 1, 1, 1}),
                  SegrePoint({1, -1, -1, 1}),
                  {1, 0}};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  p.space = encode(p.identities);
  return p;
}

}  // namespace selfdual
