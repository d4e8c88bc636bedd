#include "kodaira/smith.hpp"

#include <numeric>
#include <utility>

namespace kodaira {
namespace {

// Quotient q minimizing |a - q*b| for b != 0, so the remainder after a
// row or column reduction is at most |b|/2. This is what makes the pivot
// shrink geometrically instead of creeping down by gcd steps.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) {
    if ((r > 0) == (b > 0)) {
      q += 1;
    } else {
      q -= 1;
    }
  }
  return q;
}

// Elimination workspace. Row operations are mirrored on u, column
// operations on v, so u * original * v = a holds throughout; u and v are
// optional because callers that only need the diagonal (rank, cokernel)
// can skip the transform bookkeeping entirely.
struct Workspace {
  std::size_t r, c;
  std::vector<std::vector<mpz_class>> a, u, v;
  bool want_u, want_v;

  Workspace(const IntMatrix& m, bool wu, bool wv)
      : r(m.rows()), c(m.cols()), want_u(wu), want_v(wv) {
    a.assign(r, std::vector<mpz_class>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a[i][j] = m.at(i, j);
    if (want_u) {
      u.assign(r, std::vector<mpz_class>(r));
      for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    }
    if (want_v) {
      v.assign(c, std::vector<mpz_class>(c));
      for (std::size_t j = 0; j < c; ++j) v[j][j] = 1;
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (want_u) std::swap(u[i], u[j]);
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
    if (want_v)
      for (std::size_t k = 0; k < c; ++k) std::swap(v[k][i], v[k][j]);
  }

  // row[dst] -= q * row[src]
  void row_axpy(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < c; ++k) a[dst][k] -= q * a[src][k];
    if (want_u)
      for (std::size_t k = 0; k < r; ++k) u[dst][k] -= q * u[src][k];
  }

  // col[dst] -= q * col[src]
  void col_axpy(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < r; ++k) a[k][dst] -= q * a[k][src];
    if (want_v)
      for (std::size_t k = 0; k < c; ++k) v[k][dst] -= q * v[k][src];
  }

  // row[dst] += row[src]
  void row_add(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < c; ++k) a[dst][k] += a[src][k];
    if (want_u)
      for (std::size_t k = 0; k < r; ++k) u[dst][k] += u[src][k];
  }

  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) a[i][k] = -a[i][k];
    if (want_u)
      for (std::size_t k = 0; k < r; ++k) u[i][k] = -u[i][k];
  }

  // Smallest nonzero |entry| in the submatrix [t.., t..], or nothing.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < c; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class mag = abs(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  // Diagonalizes in place; the number of nonzero diagonal entries is the
  // rank and they satisfy the divisibility chain.
  void reduce() {
    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;  // submatrix is zero
      row_swap(t, pi);
      col_swap(t, pj);
      for (;;) {
        bool changed = false;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (a[i][t] == 0) continue;
          row_axpy(i, t, nearest_quotient(a[i][t], a[t][t]));
          if (a[i][t] != 0) changed = true;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a[t][j] == 0) continue;
          col_axpy(j, t, nearest_quotient(a[t][j], a[t][t]));
          if (a[t][j] != 0) changed = true;
        }
        if (changed) {
          // Some reduction left a nonzero remainder, strictly smaller in
          // magnitude than the current pivot; promote it and retry.
          if (find_pivot(t, pi, pj)) {
            row_swap(t, pi);
            col_swap(t, pj);
          }
          continue;
        }
        // Row and column t are clear. Enforce that the pivot divides the
        // whole remaining submatrix before moving on.
        bool divisible = true;
        for (std::size_t i = t + 1; i < r && divisible; ++i) {
          for (std::size_t j = t + 1; j < c && divisible; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              row_add(t, i);  // drags the offending entry into row t
              divisible = false;
            }
          }
        }
        if (divisible) break;
      }
      if (a[t][t] < 0) row_negate(t);
    }
  }

  IntMatrix matrix_a() const {
    std::vector<mpz_class> entries;
    entries.reserve(r * c);
    for (const auto& row : a) entries.insert(entries.end(), row.begin(), row.end());
    return IntMatrix(r, c, std::move(entries));
  }

  IntMatrix matrix_u() const {
    std::vector<mpz_class> entries;
    entries.reserve(r * r);
    for (const auto& row : u) entries.insert(entries.end(), row.begin(), row.end());
    return IntMatrix(r, r, std::move(entries));
  }

  IntMatrix matrix_v() const {
    std::vector<mpz_class> entries;
    entries.reserve(c * c);
    for (const auto& row : v) entries.insert(entries.end(), row.begin(), row.end());
    return IntMatrix(c, c, std::move(entries));
  }

  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> d(std::min(r, c));
    for (std::size_t t = 0; t < d.size(); ++t) d[t] = a[t][t];
    return d;
  }
};

void require_nonempty(const IntMatrix& m) {
  if (m.empty()) {
    throw ShapeError("Smith normal form of an empty matrix");
  }
}

}  // namespace

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> out(std::min(d.rows(), d.cols()));
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = d.at(t, t);
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  require_nonempty(m);
  Workspace w(m, /*want_u=*/true, /*want_v=*/true);
  w.reduce();
  return SmithDecomposition{w.matrix_u(), w.matrix_a(), w.matrix_v()};
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  Workspace w(m, false, false);
  w.reduce();
  std::size_t k = 0;
  for (const auto& d : w.diagonal())
    if (d != 0) ++k;
  return k;
}

CokernelStructure cokernel_structure(const IntMatrix& m) {
  CokernelStructure out;
  if (m.rows() == 0) return out;  // trivial group
  if (m.cols() == 0) {
    out.free_rank = m.rows();
    return out;
  }
  Workspace w(m, false, false);
  w.reduce();
  std::size_t k = 0;
  for (const auto& d : w.diagonal()) {
    if (d == 0) continue;
    ++k;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.rows() - k;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  Workspace w(m, false, true);
  w.reduce();
  std::size_t k = 0;
  for (const auto& d : w.diagonal())
    if (d != 0) ++k;
  std::vector<std::size_t> idx;
  for (std::size_t j = k; j < m.cols(); ++j) idx.push_back(j);
  return w.matrix_v().columns(idx);
}

}  // namespace kodaira
