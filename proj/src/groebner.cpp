#include "selfdual/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace selfdual {

using Exponents = std::vector<std::uint32_t>;

struct DenseTerm {
  Exponents exps;
  Rational coef;
};

// Terms sorted by strictly descending monomial.
using DensePoly = std::vector<DenseTerm>;

/// Dense exponent vectors laid out in priority order, and the arithmetic the
/// Buchberger loop needs on them.
class DenseRing {
 public:
  explicit DenseRing(const MonomialOrder& order) : order_(order) {
    for (std::size_t k = 0; k < order.priority_.size(); ++k) {
      const Var v = order.priority_[k];
      if (v >= slot_.size()) slot_.resize(v + 1, -1);
      if (slot_[v] != -1) throw std::invalid_argument("MonomialOrder: repeated variable");
      slot_[v] = static_cast<int>(k);
    }
  }

  std::size_t width() const { return order_.priority_.size(); }

  Exponents to_dense(const Monomial& m) const {
    Exponents e(width(), 0);
    for (const auto& [v, k] : m.factors()) {
      if (v >= slot_.size() || slot_[v] < 0) {
        throw std::invalid_argument("MonomialOrder: variable missing from priority list");
      }
      e[static_cast<std::size_t>(slot_[v])] = k;
    }
    return e;
  }

  Monomial to_sparse(const Exponents& e) const {
    std::vector<Monomial::Factor> f;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) f.emplace_back(order_.priority_[k], e[k]);
    return Monomial(std::move(f));
  }

  int compare(const Exponents& a, const Exponents& b) const {
    if (order_.kind_ == MonomialOrder::Kind::lex) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    }
    const auto da = degree(a);
    const auto db = degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    return 0;
  }

  static std::uint64_t degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  DensePoly to_dense(const Polynomial& p) const {
    DensePoly out;
    out.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) out.push_back({to_dense(m), c});
    std::sort(out.begin(), out.end(),
              [this](const DenseTerm& x, const DenseTerm& y) { return compare(x.exps, y.exps) > 0; });
    return out;
  }

  Polynomial to_sparse(const DensePoly& p) const {
    Polynomial out;
    for (const auto& t : p) out += Polynomial(to_sparse(t.exps), t.coef);
    return out;
  }

  static bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  }

  static Exponents quotient(const Exponents& a, const Exponents& b) {
    Exponents q(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) q[k] = a[k] - b[k];
    return q;
  }

  static Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
    return l;
  }

  static bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != 0 && b[k] != 0) return false;
    return true;
  }

  /// p[from..] - c * x^shift * g
  DensePoly sub_mul(const DensePoly& p, std::size_t from, const Rational& c, const Exponents& shift,
                    const DensePoly& g) const {
    DensePoly out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from;
    std::size_t j = 0;
    Exponents shifted(width());
    auto shifted_at = [&](std::size_t idx) -> const Exponents& {
      for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] = g[idx].exps[k] + shift[k];
      return shifted;
    };
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      const Exponents& gs = shifted_at(j);
      const int cmp = i == p.size() ? -1 : compare(p[i].exps, gs);
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({gs, -c * g[j].coef});
        ++j;
      } else {
        Rational sum = p[i].coef - c * g[j].coef;
        if (sum != 0) out.push_back({gs, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  DensePoly normal_form(DensePoly p, const std::vector<const DensePoly*>& basis) const {
    DensePoly rest;
    std::size_t head = 0;
    while (head < p.size()) {
      const DensePoly* divisor = nullptr;
      for (const auto* g : basis) {
        if (divides(g->front().exps, p[head].exps)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        rest.push_back(p[head++]);
        continue;
      }
      const Rational c = p[head].coef / divisor->front().coef;
      p = sub_mul(p, head, c, quotient(p[head].exps, divisor->front().exps), *divisor);
      head = 0;
    }
    return rest;
  }

  static void make_monic(DensePoly& p) {
    const Rational lead = p.front().coef;
    for (auto& t : p) t.coef /= lead;
  }

  DensePoly s_polynomial(const DensePoly& f, const DensePoly& g) const {
    const Exponents l = lcm(f.front().exps, g.front().exps);
    DensePoly left = sub_mul(DensePoly{}, 0, Rational(-1) / f.front().coef, quotient(l, f.front().exps), f);
    return sub_mul(left, 0, Rational(1) / g.front().coef, quotient(l, g.front().exps), g);
  }

 private:
  const MonomialOrder& order_;
  std::vector<int> slot_;
};

MonomialOrder::MonomialOrder(Kind kind, std::vector<Var> priority)
    : kind_(kind), priority_(std::move(priority)) {
  DenseRing check(*this);
}

MonomialOrder MonomialOrder::degrevlex_for(const std::vector<Polynomial>& polys) {
  std::set<Var> vars;
  for (const auto& p : polys) {
    auto v = p.variables();
    vars.insert(v.begin(), v.end());
  }
  return degrevlex(std::vector<Var>(vars.rbegin(), vars.rend()));
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  DenseRing ring(*this);
  return ring.compare(ring.to_dense(a), ring.to_dense(b)) < 0;
}

Monomial MonomialOrder::leading_monomial(const Polynomial& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading_monomial of zero polynomial");
  DenseRing ring(*this);
  return ring.to_sparse(ring.to_dense(p).front().exps);
}

Rational MonomialOrder::leading_coefficient(const Polynomial& p) const {
  return p.coefficient(leading_monomial(p));
}

namespace {

std::vector<const DensePoly*> pointers(const std::vector<DensePoly>& polys) {
  std::vector<const DensePoly*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

}  // namespace

std::vector<Polynomial> groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  const DenseRing ring(order);
  std::vector<DensePoly> basis;
  std::vector<CriticalPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_ids;
  bool unit = false;

  auto add = [&](DensePoly h) {
    DenseRing::make_monic(h);
    if (DenseRing::degree(h.front().exps) == 0) unit = true;
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, DenseRing::lcm(basis[i].front().exps, h.front().exps)});
      pending_ids.emplace(i, k);
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    DensePoly h = ring.normal_form(ring.to_dense(g), pointers(basis));
    if (!h.empty()) add(std::move(h));
    if (unit) break;
  }
  if (basis.empty()) throw std::invalid_argument("groebner: all generators are zero");

  while (!unit && !pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const auto& x, const auto& y) {
      return ring.compare(x.lcm, y.lcm) < 0;
    });
    const CriticalPair pair = *best;
    pending.erase(best);
    pending_ids.erase({pair.i, pair.j});

    const auto& fi = basis[pair.i].front().exps;
    const auto& fj = basis[pair.j].front().exps;
    if (DenseRing::coprime(fi, fj)) continue;
    bool chain = false;
    for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
      if (l == pair.i || l == pair.j) continue;
      if (!DenseRing::divides(basis[l].front().exps, pair.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_ids.contains(key(pair.i, l)) && !pending_ids.contains(key(pair.j, l));
    }
    if (chain) continue;

    DensePoly h = ring.normal_form(ring.s_polynomial(basis[pair.i], basis[pair.j]), pointers(basis));
    if (!h.empty()) add(std::move(h));
  }

  if (unit) return {Polynomial(1)};

  // Minimalize, then inter-reduce.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (DenseRing::divides(basis[j].front().exps, basis[i].front().exps)) keep[i] = false;
    }
  }
  std::vector<DensePoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  std::vector<DensePoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const DensePoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    DensePoly tail(minimal[i].begin() + 1, minimal[i].end());
    DensePoly r{minimal[i].front()};
    DensePoly nf = ring.normal_form(std::move(tail), others);
    r.insert(r.end(), nf.begin(), nf.end());
    DenseRing::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const DensePoly& x, const DensePoly& y) {
    return ring.compare(x.front().exps, y.front().exps) > 0;
  });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& p : reduced) out.push_back(ring.to_sparse(p));
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order) {
  const DenseRing ring(order);
  std::vector<DensePoly> dense;
  for (const auto& p : g)
    if (!p.is_zero()) dense.push_back(ring.to_dense(p));
  return ring.to_sparse(ring.normal_form(ring.to_dense(f), pointers(dense)));
}

Division divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (g.is_zero()) throw std::invalid_argument("divide: division by zero polynomial");
  const DenseRing ring(order);
  const DensePoly divisor = ring.to_dense(g);
  DensePoly p = ring.to_dense(f);
  DensePoly quotient;
  DensePoly rest;
  std::size_t head = 0;
  while (head < p.size()) {
    if (!DenseRing::divides(divisor.front().exps, p[head].exps)) {
      rest.push_back(p[head++]);
      continue;
    }
    const Rational c = p[head].coef / divisor.front().coef;
    const Exponents shift = DenseRing::quotient(p[head].exps, divisor.front().exps);
    quotient.push_back({shift, c});
    p = ring.sub_mul(p, head, c, shift, divisor);
    head = 0;
  }
  return {ring.to_sparse(quotient), ring.to_sparse(rest)};
}

bool ideal_is_trivial(const std::vector<Polynomial>& gens) {
  return ideal_is_trivial(gens, MonomialOrder::degrevlex_for(gens));
}

bool ideal_is_trivial(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  const auto basis = groebner(gens, order);
  return basis.size() == 1 && basis.front() == Polynomial(1);
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& g, const MonomialOrder& order) {
  const DenseRing ring(order);
  std::vector<DensePoly> dense;
  for (const auto& p : g)
    if (!p.is_zero()) dense.push_back(ring.to_dense(p));
  const auto ptrs = pointers(dense);
  for (std::size_t i = 0; i < dense.size(); ++i)
    for (std::size_t j = i + 1; j < dense.size(); ++j)
      if (!ring.normal_form(ring.s_polynomial(dense[i], dense[j]), ptrs).empty()) return false;
  return true;
}

bool ideal_contains(const std::vector<Polynomial>& basis, const std::vector<Polynomial>& members,
                    const MonomialOrder& order) {
  for (const auto& f : members)
    if (!reduce(f, basis, order).is_zero()) return false;
  return true;
}

}  // namespace selfdual
