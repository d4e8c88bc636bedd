#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"

namespace kodaira {

/// One letter of a word in a free group: a generator index together with
/// an exponent of +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word in the generators of a free group. Reduction
/// (cancelling adjacent x x^-1 pairs) happens on construction and after
/// every product, so two Words are equal in the free group iff ==.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t index, int exponent = 1);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(long k) const;

  /// Net exponent of one generator (image under abelianization).
  long exponent_sum(std::size_t generator) const;

  bool operator==(const Word&) const = default;

private:
  std::vector<Letter> letters_;

  void reduce();
};

/// The standard presentation of the fundamental group of a closed
/// orientable surface of the given genus:
///   generators a_1, b_1, ..., a_g, b_g  (indices 0..2g-1, a_i even),
///   single relator [a_1, b_1] ... [a_g, b_g].
struct SurfacePresentation {
  std::size_t genus = 1;

  explicit SurfacePresentation(std::size_t g) : genus(g) {
    if (g < 1) throw InvalidSpec("surface presentation needs genus >= 1");
  }

  std::size_t generator_count() const { return 2 * genus; }

  /// "a1", "b1", "a2", ... for indices 0, 1, 2, ...
  std::string generator_name(std::size_t index) const;

  /// The surface relator as a freely reduced word of length 4 * genus.
  Word relator() const;
};

/// A degree-n cyclic cover of the base surface, described by the
/// homomorphism to Z/n sending generator i to images[i].
struct CyclicCoverSpec {
  std::size_t degree = 1;             ///< n >= 1
  std::vector<std::size_t> images;    ///< residues mod n, one per generator

  bool operator==(const CyclicCoverSpec&) const = default;
};

/// Shorthand for a CyclicCoverSpec sending one generator to 1 and the rest
/// to 0.
CyclicCoverSpec twist_single_generator(std::size_t degree,
                                       std::size_t generator,
                                       std::size_t generator_count);

/// Checks degree >= 1, image count, residue range, and that the images
/// generate Z/n (the cover must be connected). Throws InvalidSpec.
void validate_cover_spec(const SurfacePresentation& base,
                         const CyclicCoverSpec& spec);

/// Genus of the total space of a degree-n cyclic cover of a genus-b
/// surface (Riemann-Hurwitz, no branching): n(b-1) + 1.
std::size_t cover_genus(std::size_t degree, std::size_t base_genus);

/// The bookkeeping behind schreier_generators, exposed so callers can
///// evaluate the generators efficiently: a prefix-closed transversal word
/// per residue class (breadth-first over positive generator steps, ties
/// broken by generator index), and for every nontrivial Schreier
/// generator T_c x T_{c + h(x)}^-1 its coset, generator letter, and the
/// freely reduced word.
struct SchreierEntry {
  std::size_t coset = 0;      ///< residue class c of the left transversal
  std::size_t generator = 0;  ///< generator index x
  Word word;

  bool operator==(const SchreierEntry&) const = default;
};

struct SchreierData {
  std::vector<Word> transversal;      ///< indexed by residue class
  std::vector<SchreierEntry> entries; ///< 2*b*n - n + 1 of them
};

SchreierData schreier_data(const SurfacePresentation& base,
                           const CyclicCoverSpec& spec);

/// Schreier generators of the kernel of the homomorphism described by
/// spec, with respect to the breadth-first transversal above (for a
/// single twisted generator t this is {t^0, ..., t^(n-1)}). The n - 1
/// trivial tree words are dropped, leaving exactly 2*b*n - n + 1
/// generators, each with total image 0 in Z/n. Order is deterministic:
/// by coset, then by generator index.
std::vector<Word> schreier_generators(const SurfacePresentation& base,
                                      const CyclicCoverSpec& spec);

}  // namespace kodaira
