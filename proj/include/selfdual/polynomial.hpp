#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include "selfdual/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfdual {

using Var = std::uint32_t;

/// Power product stored as (variable, exponent) pairs sorted by variable with
/// no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  /// Factors in any order; repeated variables are merged, zero exponents dropped.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(Var v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(Var v) const;
  std::uint32_t degree() const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& rhs) const;
  /// Exact quotient; requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT: Eigen needs Scalar(0)
  Polynomial(const Rational& constant);                          // NOLINT
  Polynomial(const Monomial& m, const Rational& coefficient);

  static Polynomial variable(Var v) { return Polynomial(Monomial::variable(v), Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  std::uint32_t total_degree() const;
  std::set<Var> variables() const;

  /// Replace a variable by a polynomial.
  Polynomial substitute(Var v, const Polynomial& value) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Names for variable indices plus the text format "c*x1^e1*x2^e2 + ...".
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(const std::vector<std::string>& names);

  /// Index of a name, registering it on first use.
  Var index(std::string_view name);
  std::optional<Var> find(std::string_view name) const;
  const std::string& name(Var v) const;
  std::size_t size() const { return names_.size(); }

  /// The polynomial consisting of one named variable.
  Polynomial operator()(std::string_view name) { return Polynomial::variable(index(name)); }

  /// Parses sums of products of rational constants and powers of names,
  /// e.g. "3*a^2*t1 - 1/2*b + 7". Unknown names are registered.
  Polynomial parse(std::string_view text);
  /// Terms by descending degree, then descending lexicographic exponent order.
  std::string format(const Polynomial& p) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace selfdual

namespace Eigen {

template <>
struct NumTraits<selfdual::Polynomial> : GenericNumTraits<selfdual::Polynomial> {
  using Real = selfdual::Polynomial;
  using NonInteger = selfdual::Polynomial;
  using Nested = selfdual::Polynomial;
  using Literal = selfdual::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
