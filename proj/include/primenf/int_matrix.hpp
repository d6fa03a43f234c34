#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "primenf/class_data.hpp"

namespace primenf {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Integer& at(std::size_t i, std::size_t j);
  const Integer& at(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  Integer trace() const;
  bool is_identity() const;
  bool is_zero() const;
  /// Largest absolute entry.
  Integer max_abs() const;

  IntMatrix operator-() const;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  IntMatrix pow(unsigned k) const;

  /// Rows and columns picked by index; used for basis reordering.
  IntMatrix permuted(const std::vector<std::size_t>& order) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// p x p cyclic permutation: 1's on the superdiagonal and bottom-left.
IntMatrix perm_block(int p);

/// (p-1) x (p-1) companion-type block: 1's on the superdiagonal, last row -1.
IntMatrix nonperm_block(int p);

/// diag(g0 x perm, g0 x perm, (t-2) x nonperm). For t == 0 the layout is
/// diag((g0-1) x perm, 1, (g0-1) x perm, 1).
IntMatrix adapted_block_matrix(const ConjugacyClass& cls);

/// [[0, I_a, 0, 0], [-I_a, 0, 0, 0], [0, 0, 0, I_q], [0, 0, -I_q, 0]], a = pg0.
IntMatrix standard_J(int pg0, int q);

bool is_symplectic(const IntMatrix& m, const IntMatrix& j);

/// Least k <= bound with m^k = I.
std::optional<int> matrix_order(const IntMatrix& m, int bound);

/// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// Exact inverse; throws NotUnimodularError unless det = +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// b * m * b^{-1}.
IntMatrix conjugate(const IntMatrix& m, const IntMatrix& b);

/// Coefficients of det(xI - m), leading coefficient first.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

}  // namespace primenf
