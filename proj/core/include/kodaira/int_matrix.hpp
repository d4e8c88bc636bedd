#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kodaira/errors.hpp"

namespace kodaira {

/// Dense matrix over the integers with arbitrary-precision entries.
///
/// Value type: every operation returns a fresh matrix and never mutates
/// its operands, so matrices can be shared freely. Entries are exact;
/// there is no overflow anywhere in the library.
class IntMatrix {
public:
  /// 0x0 matrix.
  IntMatrix() = default;

  /// rows x cols zero matrix.
  IntMatrix(std::size_t rows, std::size_t cols);

  /// rows x cols matrix from entries in row-major order.
  /// Throws ShapeError unless entries.size() == rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  /// Convenience for literals in tests and builders:
  /// IntMatrix::from_rows({{1, 1}, {-1, 0}}).
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const mpz_class& at(std::size_t i, std::size_t j) const;
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return at(i, j);
  }

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;

  /// M^k for k >= 0 by repeated squaring. Requires a square matrix.
  IntMatrix pow(unsigned long k) const;

  bool operator==(const IntMatrix& other) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  /// Determinant by fraction-free (Bareiss) elimination. Requires square.
  mpz_class determinant() const;

  /// Block-diagonal sum: [[a, 0], [0, b]].
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

  /// Horizontal concatenation [a | b]; the two blocks must agree on rows.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

  /// The submatrix of the listed columns, in the given order.
  IntMatrix columns(const std::vector<std::size_t>& indices) const;

  /// Human-readable rendering, one row per line.
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;  // row-major

  mpz_class& entry(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
};

}  // namespace kodaira
