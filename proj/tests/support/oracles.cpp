#include "support/oracles.hpp"

namespace kodaira::testing {

std::size_t rank_oracle(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    // Bareiss step: every divison below is exact (Sylvester's identity).
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                        std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<std::vector<mpz_class>> data(rows, std::vector<mpz_class>(cols));
  for (auto& row : data) {
    for (auto& v : row) v = entry(rng);
  }
  return IntMatrix::from_rows(data);
}

IntMatrix transvection(const std::vector<long>& v) {
  const std::size_t n = v.size();
  std::vector<mpz_class> entries;
  entries.reserve(n);
  for (long x : v) entries.emplace_back(x);
  const IntMatrix column(n, 1, std::move(entries));
  const IntMatrix outer = column * column.transpose();
  return IntMatrix::identity(n) - outer * symplectic_form(n / 2);
}

IntMatrix random_symplectic(std::mt19937_64& rng, std::size_t genus,
                            std::size_t factors, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m = IntMatrix::identity(2 * genus);
  for (std::size_t k = 0; k < factors; ++k) {
    std::vector<long> v(2 * genus);
    for (auto& x : v) x = entry(rng);
    m = m * transvection(v);
  }
  return m;
}

SymplecticRep random_valid_rep(std::mt19937_64& rng, std::size_t fiber_genus,
                               std::size_t base_genus) {
  std::uniform_int_distribution<int> power(-2, 2);
  SymplecticRep rep;
  rep.fiber_genus = fiber_genus;
  rep.base_genus = base_genus;
  for (std::size_t i = 0; i < base_genus; ++i) {
    const IntMatrix a = random_symplectic(rng, fiber_genus);
    const int k = power(rng);
    const IntMatrix base = k < 0 ? symplectic_inverse(a) : a;
    rep.images.push_back(a);
    rep.images.push_back(base.pow(static_cast<unsigned long>(k < 0 ? -k : k)));
  }
  return rep;
}

}  // namespace kodaira::testing
