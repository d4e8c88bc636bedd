#include "kodaira/meyer.hpp"

#include <vector>

#include "kodaira/smith.hpp"

namespace kodaira {
namespace {

int sign_of(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Signature by congruence reduction (Lagrange): repeatedly split off a
// nonzero diagonal entry via its Schur complement; when the diagonal is
// all zero but some off-diagonal entry u = m[i][j] is not, the row/column
// addition i += j manufactures the diagonal entry 2u without changing the
// signature. Exact rational arithmetic throughout.
int rational_signature(std::vector<std::vector<mpq_class>> m) {
  int sig = 0;
  std::size_t n = m.size();
  while (n > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i) {
      if (m[i][i] != 0) pivot = i;
    }
    if (pivot == n) {
      std::size_t oi = n, oj = n;
      for (std::size_t i = 0; i < n && oi == n; ++i) {
        for (std::size_t j = i + 1; j < n && oi == n; ++j) {
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
          }
        }
      }
      if (oi == n) break;  // zero form: no further contribution
      for (std::size_t k = 0; k < n; ++k) m[oi][k] += m[oj][k];
      for (std::size_t k = 0; k < n; ++k) m[k][oi] += m[k][oj];
      pivot = oi;
    }
    const mpq_class d = m[pivot][pivot];
    sig += sign_of(d);
    std::vector<std::vector<mpq_class>> next;
    next.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      std::vector<mpq_class> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        row.push_back(m[i][j] - m[i][pivot] * m[pivot][j] / d);
      }
      next.push_back(std::move(row));
    }
    m = std::move(next);
    n = m.size();
  }
  return sig;
}

}  // namespace

int symmetric_signature(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("signature of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i)) {
        throw ShapeError("signature of a non-symmetric matrix");
      }
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = m.at(i, j);
  return rational_signature(std::move(q));
}

int meyer_tau(const IntMatrix& a, const IntMatrix& b) {
  if (!is_symplectic(a) || !is_symplectic(b)) {
    throw SymplecticViolation("cocycle arguments must be symplectic");
  }
  if (a.rows() != b.rows()) {
    throw ShapeError("cocycle arguments must have equal size");
  }
  const std::size_t n = a.rows();  // 2g
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix j = symplectic_form(n / 2);

  // V = kernel of [a^-1 - I | b - I], columns are (x, y) stacked.
  const IntMatrix constraint =
      IntMatrix::hstack(symplectic_inverse(a) - id, b - id);
  const IntMatrix basis = kernel_basis(constraint);  // 2n x k
  const std::size_t k = basis.cols();
  if (k == 0) return 0;

  // Pairing <(x1,y1),(x2,y2)> = (x1 + y1)^T J (I - b) y2, assembled as
  // S^T * J(I - b) * Y on the basis, then symmetrized.
  std::vector<mpz_class> s_entries, y_entries;
  s_entries.reserve(n * k);
  y_entries.reserve(n * k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      s_entries.push_back(basis.at(r, c) + basis.at(n + r, c));
      y_entries.push_back(basis.at(n + r, c));
    }
  }
  const IntMatrix s(n, k, std::move(s_entries));
  const IntMatrix y(n, k, std::move(y_entries));
  const IntMatrix pairing = s.transpose() * (j * (id - b)) * y;
  const IntMatrix gram = pairing + pairing.transpose();
  return symmetric_signature(gram);
}

std::int64_t bundle_signature(const SymplecticRep& rep) {
  ValidationReport report = validate_rep(rep);
  if (!report.ok()) {
    const ValidationIssue& issue = report.issues.front();
    switch (issue.kind) {
      case ValidationIssue::Kind::shape:
        throw ShapeError(issue.detail);
      case ValidationIssue::Kind::symplectic:
        throw SymplecticViolation(issue.detail);
      case ValidationIssue::Kind::relator:
        throw RelatorViolation(issue.detail);
    }
  }

  const SurfacePresentation base(rep.base_genus);
  const Word relator = base.relator();
  const auto& letters = relator.letters();

  std::int64_t total = 0;
  IntMatrix prefix = evaluate_word(rep, Word({letters.front()}));
  for (std::size_t j = 1; j < letters.size(); ++j) {
    const IntMatrix next = evaluate_word(rep, Word({letters[j]}));
    total -= meyer_tau(prefix, next);
    prefix = prefix * next;
  }
  return total;
}

}  // namespace kodaira
