#include "kodaira/surface_group.hpp"

#include <deque>
#include <numeric>

namespace kodaira {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw InvalidSpec("word letters must have exponent +1 or -1");
    }
  }
  reduce();
}

Word Word::generator(std::size_t index, int exponent) {
  return Word({Letter{index, exponent}});
}

void Word::reduce() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> combined = letters_;
  combined.insert(combined.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(combined));
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    rev.push_back(Letter{it->generator, -it->exponent});
  }
  return Word(std::move(rev));
}

Word Word::pow(long k) const {
  const Word& base = k >= 0 ? *this : inverse();
  long reps = k >= 0 ? k : -k;
  Word out;
  for (long i = 0; i < reps; ++i) out = out * base;
  return out;
}

long Word::exponent_sum(std::size_t generator) const {
  long sum = 0;
  for (const auto& l : letters_)
    if (l.generator == generator) sum += l.exponent;
  return sum;
}

std::string SurfacePresentation::generator_name(std::size_t index) const {
  if (index >= generator_count()) {
    throw InvalidSpec("generator index " + std::to_string(index) +
                      " out of range for genus " + std::to_string(genus));
  }
  const std::size_t handle = index / 2 + 1;
  return (index % 2 == 0 ? "a" : "b") + std::to_string(handle);
}

Word SurfacePresentation::relator() const {
  Word w;
  for (std::size_t i = 0; i < genus; ++i) {
    const Word a = Word::generator(2 * i);
    const Word b = Word::generator(2 * i + 1);
    w = w * a * b * a.inverse() * b.inverse();
  }
  return w;
}

CyclicCoverSpec twist_single_generator(std::size_t degree,
                                       std::size_t generator,
                                       std::size_t generator_count) {
  if (generator >= generator_count) {
    throw InvalidSpec("twisted generator index out of range");
  }
  CyclicCoverSpec spec;
  spec.degree = degree;
  spec.images.assign(generator_count, 0);
  if (degree > 1) spec.images[generator] = 1;
  return spec;
}

void validate_cover_spec(const SurfacePresentation& base,
                         const CyclicCoverSpec& spec) {
  if (spec.degree < 1) {
    throw InvalidSpec("cover degree must be at least 1");
  }
  if (spec.images.size() != base.generator_count()) {
    throw InvalidSpec("cover spec has " + std::to_string(spec.images.size()) +
                      " generator images, base of genus " +
                      std::to_string(base.genus) + " needs " +
                      std::to_string(base.generator_count()));
  }
  std::size_t g = spec.degree;
  for (std::size_t v : spec.images) {
    if (v >= spec.degree) {
      throw InvalidSpec("cover spec image " + std::to_string(v) +
                        " is not a residue mod " + std::to_string(spec.degree));
    }
    g = std::gcd(g, v);
  }
  if (g != 1) {
    throw InvalidSpec(
        "cover spec images do not generate Z/" + std::to_string(spec.degree) +
        " (the cover would be disconnected)");
  }
}

std::size_t cover_genus(std::size_t degree, std::size_t base_genus) {
  if (degree < 1 || base_genus < 1) {
    throw InvalidSpec("cover genus needs degree >= 1 and base genus >= 1");
  }
  return degree * (base_genus - 1) + 1;
}

SchreierData schreier_data(const SurfacePresentation& base,
                           const CyclicCoverSpec& spec) {
  validate_cover_spec(base, spec);
  const std::size_t n = spec.degree;
  const std::size_t count = base.generator_count();

  // Breadth-first transversal over positive generator steps. Because a
  // finite cyclic group is closed under inverses, positive steps already
  // reach every residue, and breadth-first growth keeps the transversal
  // prefix-closed (a Schreier transversal), which is what guarantees that
  // exactly n - 1 of the candidate words collapse to the identity.
  std::vector<Word> transversal(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < count; ++x) {
      const std::size_t c2 = (c + spec.images[x]) % n;
      if (!seen[c2]) {
        seen[c2] = true;
        transversal[c2] = transversal[c] * Word::generator(x);
        queue.push_back(c2);
      }
    }
  }

  SchreierData data;
  data.transversal = std::move(transversal);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 0; x < count; ++x) {
      const std::size_t c2 = (c + spec.images[x]) % n;
      Word w = data.transversal[c] * Word::generator(x) *
               data.transversal[c2].inverse();
      if (w.empty()) continue;  // tree edge
      data.entries.push_back(SchreierEntry{c, x, std::move(w)});
    }
  }
  return data;
}

std::vector<Word> schreier_generators(const SurfacePresentation& base,
                                      const CyclicCoverSpec& spec) {
  SchreierData data = schreier_data(base, spec);
  std::vector<Word> out;
  out.reserve(data.entries.size());
  for (auto& e : data.entries) out.push_back(std::move(e.word));
  return out;
}

}  // namespace kodaira
