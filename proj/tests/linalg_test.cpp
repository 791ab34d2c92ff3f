#include "selfdual/families.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace selfdual;

namespace {

Rational leibniz(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rational det(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
Eigen::Index minor_rank(const Matrix& m) {
  for (int k = static_cast<int>(std::min(m.rows(), m.cols())); k > 0; --k) {
    for (const auto& rows : subsets(static_cast<int>(m.rows()), k)) {
      for (const auto& cols : subsets(static_cast<int>(m.cols()), k)) {
        Matrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        if (leibniz(sub) != 0) return k;
      }
    }
  }
  return 0;
}

// Entries in {-1, 0, 1} make rank deficiency common.
Matrix small_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::uniform_int_distribution<int> d(-1, 1);
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Linalg, RankMatchesMinorOracle) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Matrix m = small_matrix(rng, 2 + k % 3, 3 + k % 3);
    ASSERT_EQ(rank(m), minor_rank(m)) << m;
  }
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Sampler s(9);
  for (int k = 0; k < 50; ++k) {
    const Matrix m = s.matrix(4, 4);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Linalg, RrefIsCanonicalUnderRowOperations) {
  Sampler s(3);
  for (int k = 0; k < 30; ++k) {
    const Matrix m = s.full_rank(4, 12);
    const Matrix mixed = s.invertible(4) * m;
    EXPECT_EQ(rowspace_basis(m), rowspace_basis(mixed));
    EXPECT_TRUE(rowspace_equal(m, mixed));
  }
}

TEST(Linalg, KernelHasComplementaryDimensionAndAnnihilates) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Matrix m = small_matrix(rng, 3, 6);
    const Matrix ker = kernel(m);
    EXPECT_EQ(ker.rows() + rank(m), 6);
    EXPECT_TRUE(is_zero(Matrix(m * ker.transpose())));
    EXPECT_EQ(rank(ker), ker.rows());
  }
}

TEST(Linalg, RowspaceContainment) {
  Matrix a(2, 3);
  a << 1, 0, 1, 0, 1, 1;
  Matrix b(1, 3);
  b << 2, 3, 5;
  EXPECT_TRUE(rowspace_contains(a, b));
  b << 1, 1, 1;
  EXPECT_FALSE(rowspace_contains(a, b));
  EXPECT_THROW(rowspace_equal(a, Matrix(1, 4)), std::invalid_argument);
}

TEST(Linalg, PreimageRowspace) {
  // t maps x -> x t; the preimage of span(w) is every x with x t in span(w).
  Matrix t(2, 3);
  t << 1, 0, 0, 0, 1, 0;
  Matrix w(1, 3);
  w << 1, 1, 0;
  const Matrix pre = preimage_rowspace(t, w);
  ASSERT_EQ(pre.rows(), 1);
  EXPECT_EQ(pre(0, 0), pre(0, 1));
}
