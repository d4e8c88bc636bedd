#pragma once

#include <stdexcept>
#include <string>

namespace kodaira {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimensions are inconsistent with what an operation requires.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A matrix fails the symplectic condition M^T J M = J.
class SymplecticViolation : public Error {
public:
  using Error::Error;
};

/// The images of the standard generators do not satisfy the surface relation.
class RelatorViolation : public Error {
public:
  using Error::Error;
};

/// A CyclicCoverSpec or other combinatorial input is malformed,
/// e.g. the twisting homomorphism is not surjective.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

/// The operation needs explicit monodromy matrices but the bundle is
/// only known through a declared invariant block.
class DeclaredBlockUnsupported : public Error {
public:
  using Error::Error;
};

/// The operation needs a standard surface-group presentation but the
/// bundle's monodromy is indexed by a computed generating set.
class UnsupportedContent : public Error {
public:
  using Error::Error;
};

/// Two bundles combined over a common base disagree about the base.
class BaseMismatch : public Error {
public:
  using Error::Error;
};

/// A sum operation requires distinguished sections that are absent.
class MissingSection : public Error {
public:
  using Error::Error;
};

/// A quantity defined only for even coinvariant rank was requested
/// while the rank is odd.
class ParityUndefined : public Error {
public:
  using Error::Error;
};

/// A document does not conform to the on-disk schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

}  // namespace kodaira
