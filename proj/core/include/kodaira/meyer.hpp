#pragma once

#include <cstdint>

#include "kodaira/int_matrix.hpp"
#include "kodaira/monodromy.hpp"

namespace kodaira {

/// Signature (positive minus negative inertia index) of a symmetric
/// integer matrix, by exact rational congruence diagonalization.
/// Throws ShapeError when the matrix is not symmetric.
int symmetric_signature(const IntMatrix& m);

/// The cocycle value tau(a, b) for two symplectic matrices of equal size:
/// the signature of the pairing
///   <(x1,y1), (x2,y2)> = (x1 + y1)^T J (I - b) y2   (symmetrized)
/// on the space V = { (x, y) : (a^-1 - I) x + (b - I) y = 0 }.
/// Satisfies the 2-cocycle identity and |tau| <= 2g.
/// Throws SymplecticViolation unless both inputs are symplectic.
int meyer_tau(const IntMatrix& a, const IntMatrix& b);

/// Signature of the total space of the bundle with the given monodromy:
/// minus the cocycle summed along the surface relator,
///   -sum_{j=1}^{4b-1} tau(m_1 ... m_j, m_{j+1}),
/// where m_1, ..., m_4b are the images of the relator letters.
/// Validates the rep first (ShapeError / SymplecticViolation /
/// RelatorViolation).
std::int64_t bundle_signature(const SymplecticRep& rep);

}  // namespace kodaira
