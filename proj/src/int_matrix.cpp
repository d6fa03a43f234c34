#include "primenf/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "primenf/errors.hpp"

namespace primenf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ValidationError("matrix rows have different lengths");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Integer& IntMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  return (*this)(i, j);
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  return (*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer IntMatrix::trace() const {
  if (!is_square()) throw ValidationError("trace of a non-square matrix");
  Integer s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& v) { return sgn(v) == 0; });
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& v : data_) {
    if (mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(v);
  }
  return best;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(*this);
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ValidationError("dimension mismatch in matrix sum");
  }
  IntMatrix out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ValidationError("dimension mismatch in matrix difference");
  }
  IntMatrix out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ValidationError("dimension mismatch in matrix product");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix IntMatrix::pow(unsigned k) const {
  if (!is_square()) throw ValidationError("power of a non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& order) const {
  if (!is_square() || order.size() != rows_) {
    throw ValidationError("permutation does not match matrix size");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(order[i], order[j]);
  return out;
}

std::string IntMatrix::to_string() const {
  std::vector<std::string> cells(data_.size());
  std::size_t width = 1;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    cells[k] = data_[k].get_str();
    width = std::max(width, cells[k].size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& c = cells[i * cols_ + j];
      if (j > 0) out << ' ';
      out << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

IntMatrix perm_block(int p) {
  if (p < 2) throw ValidationError("block size needs p >= 2");
  const auto n = static_cast<std::size_t>(p);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  m(n - 1, 0) = 1;
  return m;
}

IntMatrix nonperm_block(int p) {
  if (p < 2) throw ValidationError("block size needs p >= 2");
  const auto n = static_cast<std::size_t>(p - 1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -1;
  return m;
}

IntMatrix adapted_block_matrix(const ConjugacyClass& cls) {
  std::vector<IntMatrix> blocks;
  if (cls.t() == 0) {
    for (int side = 0; side < 2; ++side) {
      for (int i = 2; i <= cls.g0; ++i) blocks.push_back(perm_block(cls.p));
      blocks.push_back(IntMatrix::identity(1));
    }
    return block_diagonal(blocks);
  }
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < cls.g0; ++i) blocks.push_back(perm_block(cls.p));
  for (int r = 2; r < cls.t(); ++r) blocks.push_back(nonperm_block(cls.p));
  return block_diagonal(blocks);
}

IntMatrix standard_J(int pg0, int q) {
  if (pg0 < 0 || q < 0) throw ValidationError("negative block size");
  const auto a = static_cast<std::size_t>(pg0);
  const auto b = static_cast<std::size_t>(q);
  IntMatrix j(2 * a + 2 * b, 2 * a + 2 * b);
  for (std::size_t i = 0; i < a; ++i) {
    j(i, a + i) = 1;
    j(a + i, i) = -1;
  }
  const std::size_t off = 2 * a;
  for (std::size_t i = 0; i < b; ++i) {
    j(off + i, off + b + i) = 1;
    j(off + b + i, off + i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& j) {
  if (!m.is_square() || !j.is_square() || m.rows() != j.rows()) {
    throw ValidationError("symplectic test needs square matrices of equal size");
  }
  return m.transpose() * j * m == j;
}

std::optional<int> matrix_order(const IntMatrix& m, int bound) {
  if (!m.is_square()) throw ValidationError("order of a non-square matrix");
  IntMatrix power = m;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_identity()) return k;
    if (k < bound) power = power * m;
  }
  return std::nullopt;
}

namespace {

// Callers track the sign themselves.
void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(i, j) * a(k, k);
        mpz_submul(tmp.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Fraction-free Gauss-Jordan on [m | I]; the left block ends as d * I.
  IntMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a(piv, k)) == 0) ++piv;
      if (piv == n) throw NotUnimodularError("matrix is not unimodular (det = 0)");
      swap_rows(a, k, piv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        tmp = a(i, j) * a(k, k);
        mpz_submul(tmp.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  const Integer d = prev;
  if (mpz_cmpabs_ui(d.get_mpz_t(), 1) != 0) {
    throw NotUnimodularError("matrix is not unimodular (|det| = " +
                             Integer(abs(d)).get_str() + ")");
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != d) throw InvariantError("unimodular_inverse", "diagonal mismatch");
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j) * d;
  }
  return inv;
}

IntMatrix conjugate(const IntMatrix& m, const IntMatrix& b) {
  return b * m * unimodular_inverse(b);
}

std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier; each division by k is exact over the integers.
  std::vector<Integer> coeff(n + 1);
  coeff[0] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[k - 1];
    mk = std::move(next);
    Integer tr = (m * mk).trace();
    Integer c = -tr;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    coeff[k] = c;
  }
  return coeff;
}

}  // namespace primenf
