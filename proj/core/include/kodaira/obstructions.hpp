#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kodaira/monodromy.hpp"

namespace kodaira {

/// Chern / characteristic numbers of a would-be holomorphic bundle with
/// fiber genus g, base genus b (both >= 2), and holomorphic Euler
/// characteristic chi:
///   e = 4(b-1)(g-1),  sigma = 4 chi - e,  K^2 = 12 chi - e,
///   slope = K^2 / e (exact rational).
struct ChernInvariants {
  std::int64_t chi = 0;
  std::int64_t e = 0;
  std::int64_t sigma = 0;
  std::int64_t k2 = 0;
  mpq_class slope;

  bool operator==(const ChernInvariants&) const = default;
};

ChernInvariants chern_invariants(std::size_t fiber_genus,
                                 std::size_t base_genus, std::int64_t chi);

/// The integers chi allowed by the strict window
///   3 (b-1)(g-1) < 3 chi < 4 (b-1)(g-1),
/// in increasing order. Empty when no integer fits.
std::vector<std::int64_t> admissible_chi(std::size_t fiber_genus,
                                         std::size_t base_genus);

enum class Status { passed, excluded, inconclusive, conditional };

std::string to_string(Status status);

/// Result of one obstruction check. `excluded` statuses are certain;
/// `conditional` marks exclusions that rely on a conjectural bound and
/// never affect the overall verdict. `warning` flags best-effort checks
/// that terminated early (e.g. a capped enumeration).
struct ObstructionOutcome {
  std::string name;
  Status status = Status::inconclusive;
  std::string detail;
  bool warning = false;
};

// --- individual checks, scalar forms ------------------------------------

/// Kodaira fibrations need fiber genus >= 3 and base genus >= 2.
ObstructionOutcome check_genus_bounds(std::size_t fiber_genus,
                                      std::size_t base_genus);

/// b1 = 2b + rank must be even on a Kaehler surface, i.e. the coinvariant
/// rank must be even. Interval-aware.
ObstructionOutcome check_rank_parity(const RankInterval& interval,
                                     std::size_t base_genus);

/// A bundle whose monodromy fixes all of H_1 pointwise (rank = 2g) is a
/// homology product and cannot be a Kodaira fibration.
ObstructionOutcome check_torelli_product(const BundleSpec& bundle);

/// The irregularity bound: g <= 1 + 6s is necessary, so g > 1 + 6s
/// excludes. s = g - rank/2.
ObstructionOutcome check_xiao(std::size_t fiber_genus, std::size_t s);

/// Derives s from a coinvariants report; throws ParityUndefined when the
/// rank is odd (s is undefined there - the parity check already excludes).
ObstructionOutcome check_xiao(std::size_t fiber_genus,
                              const CoinvariantsReport& report);

/// Interval form: excluded only when every admissible s violates the
/// bound, passed when none does.
ObstructionOutcome check_xiao_interval(std::size_t fiber_genus,
                                       std::size_t s_lo, std::size_t s_hi);

/// The holomorphic Euler characteristic window (strict on both sides).
/// With chi unknown, reports the admissible values, and excludes outright
/// when no integer fits the window.
ObstructionOutcome check_chi_window(std::size_t fiber_genus,
                                    std::size_t base_genus,
                                    std::optional<std::int64_t> chi);

/// Kodaira fibrations have strictly positive signature.
ObstructionOutcome check_signature_positivity(
    std::optional<std::int64_t> signature);

/// Conjectural bound 2 q_f <= g + 2: reports `conditional` (never
/// `excluded`) when violated. Opt-in.
ObstructionOutcome check_modified_xiao(std::size_t fiber_genus,
                                       std::size_t q_f_lo, std::size_t q_f_hi);

// --- cover sweep ----------------------------------------------------------

struct CheckConfig {
  /// Holomorphic Euler characteristic, when known.
  std::optional<std::int64_t> chi;
  /// Enable the conjectural irregularity bound.
  bool enable_modified_xiao = false;
  /// Cover degrees the sweep tries, ascending.
  std::vector<std::size_t> cover_degrees{2, 3, 4, 5, 6};
  enum class CoverStrategy {
    single_generator,   ///< one twisted generator per spec
    exhaustive_capped,  ///< all surjective image vectors, up to the cap
  };
  CoverStrategy cover_strategy = CoverStrategy::single_generator;
  /// Upper bound on enumerated cover specs before giving up (warning).
  std::size_t exhaustive_cap = 10000;
};

/// Pulls the bundle back to finite cyclic covers of the base and applies
/// the rank-parity and irregularity checks there; any single failing cover
/// excludes the original bundle. Deterministic first witness (lexicographic
/// in degree, then image vector). Explicit content only; otherwise
/// inconclusive.
ObstructionOutcome cover_sweep(const BundleSpec& bundle,
                               const CheckConfig& config);

// --- verdict ---------------------------------------------------------------

struct Verdict {
  std::vector<ObstructionOutcome> outcomes;
  bool excluded = false;      ///< some outcome has status excluded
  bool has_warnings = false;  ///< some outcome carries a warning

  const ObstructionOutcome* find(const std::string& name) const;
  std::string overall() const;  ///< "excluded" or "not-excluded"
};

/// Runs every applicable check in a fixed order: genus bounds, rank
/// parity, homology-product test, irregularity bound, chi window,
/// signature positivity, the conjectural bound (opt-in), cover sweep.
Verdict run_verdict(const BundleSpec& bundle, const CheckConfig& config = {});

}  // namespace kodaira
