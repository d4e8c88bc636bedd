#pragma once

#include <string>

#include "kodaira/monodromy.hpp"

namespace kodaira {

/// Parses a bundle document (see README for the schema: format 1, kinds
/// explicit | declared | generating_set | construction). Unknown fields
/// are rejected. Structural problems throw SchemaError; semantic problems
/// surface as the library's domain errors (ShapeError, SymplecticViolation,
/// RelatorViolation, InvalidSpec, ...).
///
/// With validate_leaves = false, top-level explicit and generating-set
/// payloads are wrapped without eager invariant checks, so a caller can
/// collect every issue via validate_bundle instead of stopping at the
/// first. Construction trees are always validated while they evaluate.
BundleSpec parse_bundle_document(const std::string& json_text,
                                 bool validate_leaves = true);

/// parse_bundle_document on a file's contents. Unreadable files throw
/// SchemaError.
BundleSpec load_bundle_document(const std::string& path,
                                bool validate_leaves = true);

/// Canonical serialization: explicit and declared bundles built directly
/// from payloads keep their kind; bundles with a construction history
/// serialize as the construction tree; generating-set bundles embed both
/// their images and their provenance. Deterministic, 2-space indent,
/// trailing newline. parse_bundle_document(serialize_bundle(x)) == x.
std::string serialize_bundle(const BundleSpec& bundle);

/// serialize_bundle into a file. Throws Error when the file cannot be
/// written.
void save_bundle_document(const BundleSpec& bundle, const std::string& path);

}  // namespace kodaira
