#include "selfdual/free_operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfdual {

Perm3::Perm3(std::array<int, 3> images) : images_(images) {
  std::array<int, 3> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw std::invalid_argument("Perm3: images are not a permutation of {1,2,3}");
  }
}

Perm3 Perm3::transposition(int i, int j) {
  if (i == j || i < 1 || i > 3 || j < 1 || j > 3) {
    throw std::invalid_argument("Perm3::transposition: bad indices");
  }
  std::array<int, 3> images{1, 2, 3};
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Perm3(images);
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> elements{
      Perm3(), Perm3({2, 1, 3}), Perm3({3, 2, 1}), Perm3({1, 3, 2}),
      Perm3({2, 3, 1}), Perm3({3, 1, 2})};
  return elements;
}

const std::array<Perm3, 3>& Perm3::generators() {
  static const std::array<Perm3, 3> gens{Perm3({2, 1, 3}), Perm3({3, 2, 1}), Perm3({1, 3, 2})};
  return gens;
}

Perm3 Perm3::operator*(const Perm3& rhs) const {
  return Perm3({(*this)(rhs(1)), (*this)(rhs(2)), (*this)(rhs(3))});
}

Perm3 Perm3::inverse() const {
  std::array<int, 3> inv{};
  for (int x = 1; x <= 3; ++x) inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return Perm3(inv);
}

int Perm3::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Perm3::is_transposition() const {
  int fixed = 0;
  for (int x = 1; x <= 3; ++x) fixed += (*this)(x) == x ? 1 : 0;
  return fixed == 1;
}

std::string Perm3::to_string() const {
  if (*this == identity()) return "()";
  std::string out;
  std::array<bool, 3> seen{};
  for (int start = 1; start <= 3; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += "(";
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      out += std::to_string(x);
    }
    out += ")";
  }
  return out;
}

Eigen::Index act_on_basis(const Perm3& g, Eigen::Index j) {
  // F(3) = kS3 (x)_{kS2} (V (x) V) with coset representatives 1, (13), (23);
  // S2 = {1, (12)} acts on the inner slot pair by id (x) (12), i.e. it swaps
  // the inner basis indices 0<->1 and 2<->3.
  static const std::array<Perm3, 3> reps{Perm3(), Perm3({3, 2, 1}), Perm3({1, 3, 2})};
  static const Perm3 swap12({2, 1, 3});
  const auto coset = static_cast<std::size_t>(j / 4);
  const Eigen::Index inner = j % 4;
  const Perm3 moved = g * reps[coset];
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (reps[c] == moved) return static_cast<Eigen::Index>(4 * c) + inner;
    if (reps[c] * swap12 == moved) return static_cast<Eigen::Index>(4 * c) + (inner ^ 1);
  }
  throw std::logic_error("act_on_basis: coset decomposition failed");
}

RelationSpace::RelationSpace(const Matrix& rows) {
  if (rows.cols() != kArity3Dim) {
    throw std::invalid_argument("RelationSpace: rows must have 12 columns");
  }
  basis_ = rows.rows() == 0 ? Matrix(0, kArity3Dim) : rowspace_basis(rows);
}

RelationSpace RelationSpace::whole() {
  return RelationSpace(Matrix::Identity(kArity3Dim, kArity3Dim));
}

bool RelationSpace::contains(const Vector12& v) const {
  return rowspace_contains(basis_, Matrix(v));
}

RelationSpace koszul_complement(const RelationSpace& u) {
  if (u.dim() == 0) return RelationSpace::whole();
  return RelationSpace(kernel(Matrix(u.basis() * sigma())));
}

std::optional<Perm3> invariance_violation(const RelationSpace& u) {
  for (const auto& g : Perm3::generators()) {
    const Matrix moved = u.basis() * action_matrix(g).transpose();
    if (!rowspace_contains(u.basis(), moved)) return g;
  }
  return std::nullopt;
}

RelationSpace s3_closure(const Matrix& rows) {
  RelationSpace current(rows);
  for (;;) {
    Matrix stacked(current.dim() * 4, kArity3Dim);
    stacked.topRows(current.dim()) = current.basis();
    Eigen::Index k = 1;
    for (const auto& g : Perm3::generators()) {
      stacked.middleRows(k * current.dim(), current.dim()) =
          current.basis() * action_matrix(g).transpose();
      ++k;
    }
    RelationSpace next(stacked);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

Matrix duality_gram(const RelationSpace& u, const DualityParams& p) {
  return u.basis() * gamma(p) * sigma() * u.basis().transpose();
}

bool verify_duality(const RelationSpace& u, const DualityParams& p) {
  if (u.dim() != 6) throw std::invalid_argument("verify_duality: dim U must be 6");
  if (!p.invertible()) throw std::invalid_argument("verify_duality: a^2 == b^2");
  const RelationSpace image(Matrix(u.basis() * gamma(p)));
  const bool equal = image == koszul_complement(u);
  const bool gram_zero = is_zero(duality_gram(u, p));
  if (equal != gram_zero) {
    throw std::logic_error("verify_duality: row-space test and Gram test disagree");
  }
  return equal;
}

}  // namespace selfdual
