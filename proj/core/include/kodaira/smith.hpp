#pragma once

#include <cstddef>
#include <vector>

#include "kodaira/int_matrix.hpp"

namespace kodaira {

/// Smith normal form u * m * v = d with u, v unimodular and d diagonal,
/// nonnegative, with each diagonal entry dividing the next.
struct SmithDecomposition {
  IntMatrix u;  ///< rows x rows, |det| = 1
  IntMatrix d;  ///< rows x cols diagonal
  IntMatrix v;  ///< cols x cols, |det| = 1

  /// Diagonal entries d[0], d[1], ... (length min(rows, cols)).
  std::vector<mpz_class> diagonal() const;
};

/// Computes the Smith normal form. Throws ShapeError on an empty matrix.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Rank over the rationals (number of nonzero diagonal entries).
/// Defined for every matrix, including empty ones (rank 0).
std::size_t rank(const IntMatrix& m);

/// Structure of the cokernel Z^rows / (column span of m):
/// free part Z^free_rank plus cyclic torsion factors in divisibility order.
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  ///< entries > 1, each dividing the next

  bool operator==(const CokernelStructure&) const = default;
};

/// Cokernel of m as a map Z^cols -> Z^rows. Accepts matrices with zero
/// columns (cokernel is all of Z^rows).
CokernelStructure cokernel_structure(const IntMatrix& m);

/// Integer basis of the kernel of m (as a map on column vectors), returned
/// as the columns of a cols x nullity matrix. The basis columns are the
/// kernel columns of the Smith transform, so the result is saturated:
/// it also spans the rational kernel.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace kodaira
