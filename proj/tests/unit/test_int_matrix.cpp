#include <gtest/gtest.h>

#include <random>

#include "primenf/errors.hpp"
#include "primenf/int_matrix.hpp"

using namespace primenf;

namespace {

// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

// Product of random elementary operations: always unimodular.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(a, b) = coef(rng);
    u = u * e;
  }
  return u;
}

}  // namespace

TEST(Blocks, PermBlock) {
  EXPECT_EQ(perm_block(2), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(perm_block(3), (IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  for (int p : {2, 3, 5, 7, 11}) {
    EXPECT_TRUE(perm_block(p).pow(static_cast<unsigned>(p)).is_identity());
  }
}

TEST(Blocks, NonpermBlock) {
  EXPECT_EQ(nonperm_block(2), (IntMatrix{{-1}}));
  EXPECT_EQ(nonperm_block(3), (IntMatrix{{0, 1}, {-1, -1}}));
  EXPECT_EQ(nonperm_block(3).pow(2), (IntMatrix{{-1, -1}, {1, 0}}));
  EXPECT_TRUE(nonperm_block(3).pow(3).is_identity());
  for (int p : {2, 3, 5, 7, 11, 13}) {
    EXPECT_TRUE(nonperm_block(p).pow(static_cast<unsigned>(p)).is_identity());
    EXPECT_EQ(matrix_order(nonperm_block(p), 100), p);
  }
}

TEST(Blocks, AdaptedBlockMatrix) {
  const auto n3 = nonperm_block(3);
  EXPECT_EQ(adapted_block_matrix(validate_class(3, {1, 1, 1, 1, 2}, 0)),
            block_diagonal({n3, n3, n3}));
  EXPECT_EQ(adapted_block_matrix(validate_class(2, {1, 1, 1, 1, 1, 1}, 0)),
            -IntMatrix::identity(4));
  for (int p : {2, 3, 5, 7}) {
    for (const auto& cls : enumerate_classes(6, p)) {
      const auto m = adapted_block_matrix(cls);
      EXPECT_EQ(m.rows(), static_cast<std::size_t>(2 * cls.genus));
      EXPECT_EQ(matrix_order(m, p), p);
      EXPECT_EQ(m.trace(), 2 - cls.t());
    }
  }
}

TEST(StandardJ, Shapes) {
  EXPECT_EQ(standard_J(0, 1), (IntMatrix{{0, 1}, {-1, 0}}));
  const auto j = standard_J(0, 3);
  EXPECT_EQ(j, (IntMatrix{{0, 0, 0, 1, 0, 0},
                          {0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 0, 1},
                          {-1, 0, 0, 0, 0, 0},
                          {0, -1, 0, 0, 0, 0},
                          {0, 0, -1, 0, 0, 0}}));
  for (auto [a, q] : {std::pair{0, 3}, {3, 0}, {3, 2}, {5, 4}}) {
    const auto jj = standard_J(a, q);
    EXPECT_EQ(jj * jj, -IntMatrix::identity(jj.rows()));
  }
  const auto mixed = standard_J(1, 1);
  EXPECT_EQ(mixed, (IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
}

TEST(Symplectic, Examples) {
  EXPECT_TRUE(is_symplectic(IntMatrix::identity(6), standard_J(0, 3)));
  const auto p3 = perm_block(3);
  EXPECT_TRUE(is_symplectic(block_diagonal({p3, p3}), standard_J(3, 0)));
  EXPECT_FALSE(is_symplectic(IntMatrix{{2, 0}, {0, 1}}, standard_J(0, 1)));
  EXPECT_THROW(is_symplectic(IntMatrix::identity(2), standard_J(0, 2)), ValidationError);
}

TEST(MatrixOrder, Examples) {
  EXPECT_EQ(matrix_order(IntMatrix::identity(4), 10), 1);
  EXPECT_EQ(matrix_order(perm_block(5), 10), 5);
  EXPECT_EQ(matrix_order(nonperm_block(3), 10), 3);
  EXPECT_EQ(matrix_order(standard_J(0, 1), 10), 4);
  EXPECT_FALSE(matrix_order(IntMatrix{{1, 1}, {0, 1}}, 50).has_value());
  EXPECT_FALSE(matrix_order(perm_block(7), 6).has_value());
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_matrix(rng, n, -4, 4);
      ASSERT_EQ(determinant(m), cofactor_det(m)) << m.to_string();
    }
  }
  // Zero pivots force row exchanges.
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(UnimodularInverse, Examples) {
  EXPECT_EQ(unimodular_inverse(IntMatrix::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(unimodular_inverse(IntMatrix{{1, 1}, {0, 1}}), (IntMatrix{{1, -1}, {0, 1}}));
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), NotUnimodularError);
  EXPECT_THROW(unimodular_inverse(IntMatrix{{1, 2}, {2, 4}}), NotUnimodularError);
}

TEST(UnimodularInverse, RandomUnimodular) {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      auto u = random_unimodular(rng, n, 25);
      if (trial % 2 == 1) {
        // A row swap makes det = -1 and puts zeros on the diagonal.
        for (std::size_t j = 0; j < n && n > 1; ++j) std::swap(u(0, j), u(n - 1, j));
      }
      const auto inv = unimodular_inverse(u);
      ASSERT_TRUE((inv * u).is_identity());
      ASSERT_TRUE((u * inv).is_identity());
      if (n <= 5) {
        ASSERT_EQ(Integer(abs(cofactor_det(u))), 1);
      }
    }
  }
}

TEST(UnimodularInverse, LargeEntries) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 1) = Integer("123456789012345678901234567890");
  const auto inv = unimodular_inverse(m);
  EXPECT_EQ(inv(0, 1), Integer("-123456789012345678901234567890"));
  EXPECT_TRUE((m * inv).is_identity());
}

TEST(Conjugate, Examples) {
  const auto m = nonperm_block(5);
  EXPECT_EQ(conjugate(m, IntMatrix::identity(4)), m);
  EXPECT_EQ(conjugate(perm_block(2), IntMatrix{{0, 1}, {1, 0}}), perm_block(2));
}

TEST(Conjugate, PreservesTraceAndCharacteristicPolynomial) {
  std::mt19937 rng(3);
  const auto n5 = nonperm_block(5);
  const auto m = block_diagonal({n5, perm_block(5)});
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_unimodular(rng, m.rows(), 30);
    const auto c = conjugate(m, b);
    EXPECT_EQ(c.trace(), m.trace());
    EXPECT_EQ(characteristic_polynomial(c), characteristic_polynomial(m));
  }
}

TEST(CharacteristicPolynomial, MatchesDeterminantAtIntegerPoints) {
  std::mt19937 rng(19);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, n, -5, 5);
      const auto poly = characteristic_polynomial(m);
      ASSERT_EQ(poly.size(), n + 1);
      for (int x = -3; x <= 3; ++x) {
        Integer value = 0;
        for (const auto& c : poly) value = value * x + c;
        IntMatrix shifted = -m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += x;
        ASSERT_EQ(value, cofactor_det(shifted));
      }
    }
  }
  // x^2 + x + 1 for the order-3 block.
  EXPECT_EQ(characteristic_polynomial(nonperm_block(3)),
            (std::vector<Integer>{1, 1, 1}));
}

TEST(IntMatrix, ArithmeticAndHelpers) {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, (IntMatrix{{1, 3}, {4, 4}}));
  EXPECT_EQ(a - a, IntMatrix(2, 2));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), 5);
  EXPECT_EQ(a.permuted({1, 0}), (IntMatrix{{4, 3}, {2, 1}}));
  EXPECT_EQ((IntMatrix{{-7, 2}}.max_abs()), 7);
  EXPECT_THROW(a * IntMatrix(3, 1), ValidationError);
  EXPECT_THROW(a.at(2, 0), std::out_of_range);
}
