#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kodaira/int_matrix.hpp"
#include "kodaira/surface_group.hpp"

namespace kodaira {

/// The standard symplectic form J on H_1 of a genus-g surface, in the
/// basis a_1, b_1, ..., a_g, b_g: block diagonal copies of [[0,1],[-1,0]].
/// With this convention a direct sum of surfaces gives a direct sum of
/// forms, so section sums of bundles act blockwise on homology.
IntMatrix symplectic_form(std::size_t genus);

/// Whether m is square of even size and satisfies m^T J m = J.
bool is_symplectic(const IntMatrix& m);

/// Inverse of a symplectic matrix, computed exactly as -J m^T J.
IntMatrix symplectic_inverse(const IntMatrix& m);

/// Monodromy of a surface bundle over a surface, recorded on fiber
/// homology: one integer symplectic 2g x 2g matrix per standard generator
/// a_1, b_1, ..., a_b, b_b of the base surface group. Plain data; use
/// validate_rep to check the invariants.
struct SymplecticRep {
  std::size_t fiber_genus = 1;       ///< g >= 1
  std::size_t base_genus = 1;        ///< b >= 1
  std::vector<IntMatrix> images;     ///< 2 * base_genus matrices, 2g x 2g

  const IntMatrix& image(std::size_t generator) const {
    return images.at(generator);
  }

  bool operator==(const SymplecticRep&) const = default;
};

/// Monodromy images indexed by a computed generating set (the output of
/// a cover restriction) rather than by a standard surface presentation.
/// Operations that need the standard presentation reject this content.
struct GeneratingSetRep {
  std::size_t fiber_genus = 1;
  std::size_t base_genus = 1;        ///< genus of the covering base surface
  std::vector<IntMatrix> images;     ///< one per generating-set element
  std::string origin;                ///< human-readable derivation
  bool inherited_valid = false;      ///< invariants hold because the source rep's did

  bool operator==(const GeneratingSetRep&) const = default;
};

enum class RankParity { unknown, even, odd };

std::string to_string(RankParity parity);

/// A bundle known only through certified invariants: the coinvariant rank
/// is pinned to an interval rather than a number. Signature and section
/// data live on the owning BundleSpec.
struct DeclaredBlock {
  std::size_t fiber_genus = 1;
  std::size_t base_genus = 1;
  std::size_t coinv_rank_lo = 0;             ///< inclusive
  std::size_t coinv_rank_hi = 0;             ///< inclusive, <= 2 * fiber_genus
  RankParity rank_parity = RankParity::unknown;

  bool operator==(const DeclaredBlock&) const = default;
};

/// One issue found by validate_rep.
struct ValidationIssue {
  enum class Kind { shape, symplectic, relator };
  Kind kind = Kind::shape;
  std::optional<std::size_t> generator;  ///< offending generator, if any
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks shapes (2b images, each 2g x 2g), the symplectic condition for
/// every image, and - only when those hold - the surface relation
/// [A_1,B_1]...[A_b,B_b] = I. Collects all issues instead of stopping.
ValidationReport validate_rep(const SymplecticRep& rep);

/// validate_rep for any content kind: explicit reps get the full check,
/// generating-set reps get shape and symplectic checks per image (there
/// is no relator to test), declared blocks have nothing left to check
/// beyond construction-time interval sanity.
class BundleSpec;
ValidationReport validate_bundle(const BundleSpec& bundle);

/// Image of a word under the representation; inverse letters use the
/// exact symplectic inverse. Requires symplectic images to be meaningful.
IntMatrix evaluate_word(const SymplecticRep& rep, const Word& word);

/// Structure of the monodromy coinvariants H_1(fiber)_pi: the quotient of
/// Z^2g by the columns of all M_i - I.
struct CoinvariantsReport {
  std::size_t fiber_genus = 0;
  std::size_t base_genus = 0;
  std::size_t rank = 0;                ///< free rank of the coinvariant lattice
  std::vector<mpz_class> torsion;      ///< cyclic factors, divisibility order
  std::size_t b1 = 0;                  ///< first Betti number of the total space: 2b + rank
  std::optional<std::size_t> q_f;      ///< rank / 2 when rank is even
  std::optional<std::size_t> s;        ///< fiber_genus - rank / 2 when rank is even

  bool operator==(const CoinvariantsReport&) const = default;
};

/// Coinvariants from an arbitrary family of homology images (standard or
/// computed generating set). base_genus only feeds the b1 formula.
CoinvariantsReport coinvariants_of_images(const std::vector<IntMatrix>& images,
                                          std::size_t fiber_genus,
                                          std::size_t base_genus);

/// What is known about the coinvariant rank: a point for explicit content,
/// an interval (with optional parity) for declared blocks.
struct RankInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  RankParity parity = RankParity::unknown;

  bool operator==(const RankInterval&) const = default;
};

/// One node of the construction history of a bundle. The tree mirrors the
/// on-disk construction documents: leaves carry their payload so that a
/// serialized bundle can be reparsed into an equal one.
struct ProvenanceNode {
  std::string op;  ///< explicit | declared | generating_set | product |
                   ///< trefoil | kodaira_thurston | ekkos | section_sum |
                   ///< fiber_sum_product | cover | assume_rank_parity
  std::map<std::string, std::int64_t> args;       ///< g, b, degree, ...
  RankParity parity = RankParity::unknown;        ///< assume_rank_parity only
  std::vector<std::size_t> cover_images;          ///< cover only
  std::optional<SymplecticRep> rep;               ///< explicit leaf payload
  std::optional<DeclaredBlock> block;             ///< declared leaf payload
  std::optional<std::int64_t> leaf_signature;     ///< leaf payload
  bool leaf_has_zero_section = false;             ///< leaf payload
  std::vector<ProvenanceNode> children;

  bool operator==(const ProvenanceNode&) const = default;
};

/// A surface bundle over a surface as this library knows it: content
/// (explicit monodromy, computed generating set, or declared invariants),
/// the tracked signature of the total space (nullopt = unknown), whether
/// a distinguished zero section is available, and how it was built.
class BundleSpec {
public:
  using Content = std::variant<SymplecticRep, GeneratingSetRep, DeclaredBlock>;

  BundleSpec(Content content, std::optional<std::int64_t> signature,
             bool has_zero_section, ProvenanceNode provenance);

  bool is_explicit() const;
  bool is_generating_set() const;
  bool is_declared() const;

  const Content& content() const { return content_; }

  /// Throws DeclaredBlockUnsupported / UnsupportedContent when the content
  /// is not an explicit standard-presentation rep.
  const SymplecticRep& rep() const;
  const GeneratingSetRep& generating_set() const;
  const DeclaredBlock& declared() const;

  std::size_t fiber_genus() const;
  std::size_t base_genus() const;
  std::optional<std::int64_t> signature() const { return signature_; }
  bool has_zero_section() const { return has_zero_section_; }
  const ProvenanceNode& provenance() const { return provenance_; }

  bool operator==(const BundleSpec&) const = default;

private:
  Content content_;
  std::optional<std::int64_t> signature_;
  bool has_zero_section_ = false;
  ProvenanceNode provenance_;
};

/// Coinvariants of the bundle's monodromy images.
/// Throws DeclaredBlockUnsupported for declared blocks.
CoinvariantsReport coinvariants(const BundleSpec& bundle);

/// Coinvariant rank knowledge for any content kind.
RankInterval rank_interval(const BundleSpec& bundle);

// --- constructors -----------------------------------------------------

/// Wraps an explicit rep. Validates it and throws the first issue
/// (ShapeError / SymplecticViolation / RelatorViolation).
BundleSpec from_rep(SymplecticRep rep, std::optional<std::int64_t> signature,
                    bool has_zero_section);

/// Wraps a declared block, checking interval sanity (InvalidSpec).
BundleSpec from_declared(DeclaredBlock block,
                         std::optional<std::int64_t> signature,
                         bool has_zero_section);

/// Wraps a generating-set rep (used by document parsing). No relator to
/// check; shapes and the symplectic condition are enforced.
BundleSpec from_generating_set(GeneratingSetRep rep,
                               std::optional<std::int64_t> signature,
                               bool has_zero_section);

/// Unchecked variants for loaders that want to collect every invariant
/// violation afterwards (validate_bundle) instead of throwing on the
/// first. Anything built on top of an unvalidated bundle is garbage-in,
/// garbage-out.
BundleSpec from_rep_unchecked(SymplecticRep rep,
                              std::optional<std::int64_t> signature,
                              bool has_zero_section);
BundleSpec from_generating_set_unchecked(GeneratingSetRep rep,
                                         std::optional<std::int64_t> signature,
                                         bool has_zero_section);

// --- named building blocks --------------------------------------------

/// Trivial bundle: fiber genus g, base genus b, every image the identity.
/// Signature 0, zero section available.
BundleSpec product_block(std::size_t fiber_genus, std::size_t base_genus);

/// Genus-1 bundle whose monodromy around the first handle is the trefoil
/// matrix [[1,1],[-1,0]] (order 6) and trivial elsewhere. Signature 0,
/// zero section available.
BundleSpec trefoil_block(std::size_t base_genus);

/// Genus-1 bundle with the nilmanifold twist [[1,1],[0,1]] (infinite
/// order, unipotent) around the first handle. Signature 0, zero section.
BundleSpec kodaira_thurston_block(std::size_t base_genus);

/// The declared signature-4 block: fiber genus 3 over base genus 9,
/// coinvariant rank certified to lie in [0, 5], zero section available.
BundleSpec ekkos_block();

// --- calculus ----------------------------------------------------------

/// Sum along the zero sections: fiber genera add, base stays. Requires a
/// common base genus (BaseMismatch) and zero sections on both sides
/// (MissingSection). Explicit contents combine blockwise; a declared side
/// makes the result declared with interval arithmetic on the ranks.
BundleSpec section_sum(const BundleSpec& x, const BundleSpec& y);

/// Fiber sum with the trivial bundle over a genus-c surface: base genus
/// grows by c, monodromy extends by identities, coinvariants and
/// signature are unchanged.
BundleSpec fiber_sum_with_product(const BundleSpec& x,
                                  std::size_t added_base_genus);

/// Pullback to the cyclic cover of the base described by spec. The result
/// is a GeneratingSetRep over the cover (genus n(b-1)+1); a known
/// signature multiplies by the degree. Explicit content only.
BundleSpec restrict_to_cover(const BundleSpec& x, const CyclicCoverSpec& spec);

/// Narrows a declared block's rank interval to the assumed parity.
/// Throws InvalidSpec when the assumption contradicts the interval or an
/// already-declared parity; UnsupportedContent on non-declared bundles.
BundleSpec assume_rank_parity(const BundleSpec& x, RankParity parity);

// --- assembled families -------------------------------------------------

/// The declared-block pipeline: signature-4 block, parity assumption,
/// one nilmanifold block when the assumed parity is odd, trivial-bundle
/// padding up to fiber genus g, then base extension to genus b.
/// Result: fiber genus g over base genus b, signature 4, zero section,
/// coinvariant rank certified in [2g-6, 2g-2] with even parity
/// (equivalently s in [1, 3]). Requires g >= 4, b >= 9.
BundleSpec build_z_gb(std::size_t fiber_genus, std::size_t base_genus,
                      RankParity assumed_parity);

/// build_z_gb(g, b) section-summed with a trefoil block: fiber genus g+1,
/// same rank interval, so s lands in [2, 4]. Requires fiber_genus_plus_one
/// >= 5 and base_genus >= 9.
BundleSpec build_w(std::size_t fiber_genus_plus_one, std::size_t base_genus,
                   RankParity assumed_parity);

}  // namespace kodaira
