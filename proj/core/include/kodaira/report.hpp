#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kodaira/monodromy.hpp"
#include "kodaira/obstructions.hpp"

namespace kodaira {

enum class OutputFormat { text, json };

/// "explicit", "generating_set", or "declared".
std::string content_kind(const BundleSpec& bundle);

/// Rendering is deterministic: the same inputs give byte-identical output.
std::string render_validation(const ValidationReport& report,
                              OutputFormat format);

std::string render_coinvariants(const CoinvariantsReport& report,
                                OutputFormat format);

std::string render_verdict(const BundleSpec& bundle, const Verdict& verdict,
                           OutputFormat format);

/// Result of comparing the relator-sum signature against the tracked one.
struct SignatureComparison {
  std::int64_t computed = 0;
  std::optional<std::int64_t> tracked;
  bool consistent = true;  ///< true when untracked or equal
};

std::string render_signature(const SignatureComparison& comparison,
                             OutputFormat format);

}  // namespace kodaira
