#pragma once

// Buchberger's algorithm over the rationals.

#include "selfdual/polynomial.hpp"

#include <vector>

namespace selfdual {

/// A term order on monomials. `priority` lists every variable that may occur,
/// most significant first; degrevlex breaks degree ties by the least
/// significant variable.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex };

  MonomialOrder(Kind kind, std::vector<Var> priority);
  static MonomialOrder degrevlex(std::vector<Var> priority) {
    return {Kind::degrevlex, std::move(priority)};
  }
  static MonomialOrder lex(std::vector<Var> priority) { return {Kind::lex, std::move(priority)}; }
  /// degrevlex over the variables occurring in the polynomials, higher index
  /// more significant.
  static MonomialOrder degrevlex_for(const std::vector<Polynomial>& polys);

  Kind kind() const { return kind_; }
  const std::vector<Var>& priority() const { return priority_; }

  /// Strict comparison; throws std::invalid_argument for a variable missing
  /// from the priority list.
  bool less(const Monomial& a, const Monomial& b) const;
  Monomial leading_monomial(const Polynomial& p) const;
  Rational leading_coefficient(const Polynomial& p) const;

 private:
  friend class DenseRing;
  Kind kind_;
  std::vector<Var> priority_;
};

/// Reduced Groebner basis (monic, sorted by descending leading monomial).
/// Throws std::invalid_argument if every generator is zero.
std::vector<Polynomial> groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Full normal form of f modulo g. Unique when g is a Groebner basis for the
/// order; zero iff f lies in the ideal.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by a single polynomial: f = quotient * g + remainder.
Division divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// The ideal is the whole ring, i.e. its reduced basis is {1}.
bool ideal_is_trivial(const std::vector<Polynomial>& gens);
bool ideal_is_trivial(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Every S-polynomial of g reduces to zero modulo g.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& g, const MonomialOrder& order);

/// Every element of `members` reduces to zero modulo the Groebner basis `basis`.
bool ideal_contains(const std::vector<Polynomial>& basis, const std::vector<Polynomial>& members,
                    const MonomialOrder& order);

}  // namespace selfdual
