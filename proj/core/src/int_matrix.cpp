#include "kodaira/int_matrix.hpp"

#include <sstream>

namespace kodaira {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("entry count " + std::to_string(entries_.size()) +
                     " does not fill a " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " matrix");
  }
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<mpz_class>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    converted.emplace_back(row.begin(), row.end());
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<mpz_class> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw ShapeError("rows have inconsistent lengths");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i) = 1;
  return m;
}

const mpz_class& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw ShapeError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") out of range for " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
  return entries_[i * cols_ + j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entry(j, i) = entries_[i * cols_ + j];
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("sum of " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " and " +
                     std::to_string(other.rows_) + "x" +
                     std::to_string(other.cols_));
  }
  IntMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] + other.entries_[k];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  return *this + (-other);
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw ShapeError("product of " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " and " +
                     std::to_string(other.rows_) + "x" +
                     std::to_string(other.cols_));
  }
  IntMatrix m(rows_, other.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += entries_[i * cols_ + k] * other.entries_[k * other.cols_ + j];
      }
      m.entry(i, j) = acc;
    }
  }
  return m;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
  if (!is_square()) throw ShapeError("power of a non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (entries_[i * cols_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (!is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;

  // Bareiss fraction-free elimination: every division below is exact,
  // intermediate values stay minor-sized instead of exploding.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = entries_[i * cols_ + j];

  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (a[t][t] == 0) {
      std::size_t p = t + 1;
      while (p < n && a[p][t] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[t], a[p]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        mpz_class num = a[t][t] * a[i][j] - a[i][t] * a[t][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][t] = 0;
    }
    prev = a[t][t];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.entry(i, j) = a.entries_[i * a.cols_ + j];
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.entry(a.rows_ + i, a.cols_ + j) = b.entries_[i * b.cols_ + j];
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) {
    throw ShapeError("hstack of matrices with " + std::to_string(a.rows_) +
                     " and " + std::to_string(b.rows_) + " rows");
  }
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.entry(i, j) = a.entries_[i * a.cols_ + j];
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.entry(i, a.cols_ + j) = b.entries_[i * b.cols_ + j];
  }
  return m;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i)
      m.entry(i, j) = entries_[i * cols_ + indices[j]];
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out << ' ';
      out << entries_[i * cols_ + j];
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace kodaira
