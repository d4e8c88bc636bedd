#include <algorithm>
#include <set>

#include <doctest.h>

#include "kodaira/errors.hpp"
#include "kodaira/smith.hpp"
#include "kodaira/surface_group.hpp"

using namespace kodaira;

namespace {

Word gen(std::size_t i, int e = 1) { return Word::generator(i, e); }

}  // namespace

TEST_CASE("words reduce freely") {
  CHECK((gen(0) * gen(0, -1)).empty());
  CHECK(gen(0) * gen(1) * gen(1, -1) == gen(0));
  CHECK((gen(0) * gen(1)).inverse() == gen(1, -1) * gen(0, -1));
  CHECK(gen(2).pow(3).size() == 3);
  CHECK(gen(2).pow(-2) == gen(2, -1) * gen(2, -1));
  CHECK(gen(2).pow(0).empty());
  CHECK_THROWS_AS(Word({Letter{0, 2}}), InvalidSpec);

  const Word w = gen(0) * gen(1) * gen(0, -1) * gen(1);
  CHECK(w.exponent_sum(0) == 0);
  CHECK(w.exponent_sum(1) == 2);
}

TEST_CASE("surface presentation basics") {
  CHECK_THROWS_AS(SurfacePresentation(0), InvalidSpec);
  const SurfacePresentation surface(2);
  CHECK(surface.generator_count() == 4);
  CHECK(surface.generator_name(0) == "a1");
  CHECK(surface.generator_name(1) == "b1");
  CHECK(surface.generator_name(2) == "a2");
  CHECK(surface.generator_name(3) == "b2");

  const Word relator = surface.relator();
  CHECK(relator.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) CHECK(relator.exponent_sum(i) == 0);
}

TEST_CASE("cover specs") {
  const CyclicCoverSpec twist = twist_single_generator(6, 0, 18);
  CHECK(twist.degree == 6);
  CHECK(twist.images.size() == 18);
  CHECK(twist.images[0] == 1);
  CHECK(std::all_of(twist.images.begin() + 1, twist.images.end(),
                    [](std::size_t r) { return r == 0; }));

  // Degree 1 is the identity cover.
  const CyclicCoverSpec trivial = twist_single_generator(1, 3, 18);
  CHECK(std::all_of(trivial.images.begin(), trivial.images.end(),
                    [](std::size_t r) { return r == 0; }));

  const SurfacePresentation base(9);
  CHECK_NOTHROW(validate_cover_spec(base, twist));
  CHECK_NOTHROW(validate_cover_spec(
      base, CyclicCoverSpec{6, {2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                0, 0, 0}}));  // gcd(2,3,6) = 1
  // Residues all even cannot generate Z/6.
  CHECK_THROWS_AS(validate_cover_spec(
                      base, CyclicCoverSpec{6, {2, 4, 0, 0, 0, 0, 0, 0, 0, 0,
                                                0, 0, 0, 0, 0, 0, 0, 0}}),
                  InvalidSpec);
  // Residue out of range.
  CHECK_THROWS_AS(validate_cover_spec(
                      base, CyclicCoverSpec{6, {7, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                                0, 0, 0, 0, 0, 0, 0, 0}}),
                  InvalidSpec);
  // Wrong image count.
  CHECK_THROWS_AS(validate_cover_spec(base, CyclicCoverSpec{6, {1, 0}}),
                  InvalidSpec);
  CHECK_THROWS_AS(validate_cover_spec(base, CyclicCoverSpec{0, {}}),
                  InvalidSpec);
}

TEST_CASE("genus of cyclic covers") {
  CHECK(cover_genus(6, 9) == 49);
  CHECK(cover_genus(1, 9) == 9);
  CHECK(cover_genus(2, 2) == 3);
  CHECK(cover_genus(4, 1) == 1);
}

TEST_CASE("schreier generators of a small cover") {
  // Genus 1, degree 2, a1 -> 1: index-2 subgroup generated by
  // a^2, b, and a b a^-1.
  const SurfacePresentation torus(1);
  const CyclicCoverSpec spec{2, {1, 0}};
  const std::vector<Word> gens = schreier_generators(torus, spec);
  CHECK(gens.size() == 3);  // 2 b n - n + 1 with b = 1, n = 2

  const Word a = gen(0);
  const Word b = gen(1);
  const std::set<std::vector<Letter>> have = [&] {
    std::set<std::vector<Letter>> s;
    for (const Word& w : gens) s.insert(w.letters());
    return s;
  }();
  CHECK(have.count(a.pow(2).letters()) == 1);
  CHECK(have.count(b.letters()) == 1);
  CHECK(have.count((a * b * a.inverse()).letters()) == 1);
}

TEST_CASE("schreier data on a twisted high-genus cover") {
  const SurfacePresentation base(9);
  const CyclicCoverSpec spec = twist_single_generator(6, 0, 18);
  const SchreierData data = schreier_data(base, spec);
  CHECK(data.transversal.size() == 6);
  // Prefix-closed transversal over positive steps: powers of a1 here.
  for (std::size_t c = 0; c < 6; ++c) {
    CHECK(data.transversal[c] == gen(0).pow(static_cast<long>(c)));
  }

  const std::vector<Word> gens = schreier_generators(base, spec);
  CHECK(gens.size() == 2 * 9 * 6 - 6 + 1);  // 103

  // Every Schreier generator lies in the kernel: its abelianized image
  // in Z/6 vanishes.
  for (const Word& w : gens) {
    long image = 0;
    for (std::size_t i = 0; i < 18; ++i) {
      image += w.exponent_sum(i) * static_cast<long>(spec.images[i]);
    }
    CHECK(image % 6 == 0);
  }
}

TEST_CASE("abelianized schreier generators span an index-n sublattice") {
  const SurfacePresentation base(2);
  const CyclicCoverSpec spec = twist_single_generator(3, 1, 4);
  const std::vector<Word> gens = schreier_generators(base, spec);
  CHECK(gens.size() == 2 * 2 * 3 - 3 + 1);  // 10

  std::vector<std::vector<mpz_class>> columns;
  for (const Word& w : gens) {
    std::vector<mpz_class> col;
    for (std::size_t i = 0; i < 4; ++i) col.emplace_back(w.exponent_sum(i));
    columns.push_back(std::move(col));
  }
  IntMatrix m(4, columns.size());
  {
    std::vector<mpz_class> entries;
    for (std::size_t i = 0; i < 4; ++i) {
      for (const auto& col : columns) entries.push_back(col[i]);
    }
    m = IntMatrix(4, columns.size(), std::move(entries));
  }
  const std::vector<mpz_class> diag = smith_normal_form(m).diagonal();
  mpz_class index = 1;
  for (const mpz_class& d : diag) {
    if (d != 0) index *= d;
  }
  CHECK(rank(m) == 4);
  CHECK(index == 3);
}
