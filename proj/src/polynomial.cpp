#include "selfdual/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace selfdual {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::variable(Var v, std::uint32_t exponent) {
  return Monomial(std::vector<Factor>{{v, exponent}});
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& rhs) const {
  auto b = rhs.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != rhs.factors_.end() && b->first < v) ++b;
    if (b == rhs.factors_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("Monomial: inexact division");
  Monomial out;
  auto d = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t remaining = e;
    if (d != divisor.factors_.end() && d->first == v) {
      remaining -= d->second;
      ++d;
    }
    if (remaining > 0) out.factors_.emplace_back(v, remaining);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> merged = a.factors_;
  merged.insert(merged.end(), b.factors_.begin(), b.factors_.end());
  std::sort(merged.begin(), merged.end());
  Monomial out;
  for (const auto& [v, e] : merged) {
    if (!out.factors_.empty() && out.factors_.back().first == v) {
      out.factors_.back().second = std::max(out.factors_.back().second, e);
    } else {
      out.factors_.emplace_back(v, e);
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() && y != b.factors_.end()) {
    if (x->first == y->first) return false;
    if (x->first < y->first) {
      ++x;
    } else {
      ++y;
    }
  }
  return true;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(v);
    std::vector<Monomial::Factor> rest;
    for (const auto& f : m.factors())
      if (f.first != v) rest.push_back(f);
    Polynomial term(Monomial(rest), c);
    for (std::uint32_t k = 0; k < e; ++k) term *= value;
    out += term;
  }
  return out;
}

// ----------------------------------------------------------- VariableNames

VariableNames::VariableNames(const std::vector<std::string>& names) {
  for (const auto& n : names) index(n);
}

Var VariableNames::index(std::string_view name) {
  if (auto v = find(name)) return *v;
  names_.emplace_back(name);
  return static_cast<Var>(names_.size() - 1);
}

std::optional<Var> VariableNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

const std::string& VariableNames::name(Var v) const {
  if (v >= names_.size()) throw std::out_of_range("VariableNames: unknown variable index");
  return names_[v];
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VariableNames& names) : text_(text), names_(names) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial sum;
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      sum += negative ? -term : term;
      first = false;
    }
    return sum;
  }

 private:
  Polynomial parse_term() {
    Polynomial product(1);
    for (;;) {
      skip_ws();
      product *= parse_factor();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return product;
    }
  }

  Polynomial parse_factor() {
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      try {
        return Polynomial(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.column());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const Var v = names_.index(text_.substr(start, pos_ - start));
      std::uint32_t exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits == pos_) fail("expected exponent");
        exponent = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(digits, pos_ - digits))));
      }
      return Polynomial(Monomial::variable(v, exponent), Rational(1));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial VariableNames::parse(std::string_view text) { return PolyParser(text, *this).parse(); }

std::string VariableNames::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    // Lower variable index with higher exponent first.
    const auto& fx = x.first.factors();
    const auto& fy = y.first.factors();
    for (std::size_t i = 0; i < std::min(fx.size(), fy.size()); ++i) {
      if (fx[i].first != fy[i].first) return fx[i].first < fy[i].first;
      if (fx[i].second != fy[i].second) return fx[i].second > fy[i].second;
    }
    return fx.size() > fy.size();
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational magnitude = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      magnitude = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += name(v);
      if (e != 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += to_string(magnitude) + "*" + body;
    }
  }
  return out;
}

}  // namespace selfdual
