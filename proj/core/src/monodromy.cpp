#include "kodaira/monodromy.hpp"

#include <cassert>

#include "kodaira/smith.hpp"

namespace kodaira {

IntMatrix symplectic_form(std::size_t genus) {
  IntMatrix block = IntMatrix::from_rows({{0, 1}, {-1, 0}});
  IntMatrix j(0, 0);
  for (std::size_t i = 0; i < genus; ++i) j = IntMatrix::direct_sum(j, block);
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) return false;
  const IntMatrix j = symplectic_form(m.rows() / 2);
  return m.transpose() * j * m == j;
}

IntMatrix symplectic_inverse(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw ShapeError("symplectic inverse of a non-symplectic shape");
  }
  const IntMatrix j = symplectic_form(m.rows() / 2);
  return -(j * m.transpose() * j);
}

std::string to_string(RankParity parity) {
  switch (parity) {
    case RankParity::even:
      return "even";
    case RankParity::odd:
      return "odd";
    default:
      return "unknown";
  }
}

ValidationReport validate_rep(const SymplecticRep& rep) {
  ValidationReport report;
  const std::size_t g = rep.fiber_genus;
  const std::size_t expected = 2 * rep.base_genus;
  if (g < 1 || rep.base_genus < 1) {
    report.issues.push_back({ValidationIssue::Kind::shape, std::nullopt,
                             "fiber and base genus must be at least 1"});
    return report;
  }
  if (rep.images.size() != expected) {
    report.issues.push_back(
        {ValidationIssue::Kind::shape, std::nullopt,
         "expected " + std::to_string(expected) + " generator images, got " +
             std::to_string(rep.images.size())});
    return report;
  }
  const SurfacePresentation base(rep.base_genus);
  bool all_symplectic = true;
  for (std::size_t i = 0; i < expected; ++i) {
    const IntMatrix& m = rep.images[i];
    if (m.rows() != 2 * g || m.cols() != 2 * g) {
      report.issues.push_back(
          {ValidationIssue::Kind::shape, i,
           "image of " + base.generator_name(i) + " is " +
               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
               ", expected " + std::to_string(2 * g) + "x" +
               std::to_string(2 * g)});
      all_symplectic = false;
      continue;
    }
    if (!is_symplectic(m)) {
      report.issues.push_back({ValidationIssue::Kind::symplectic, i,
                               "image of " + base.generator_name(i) +
                                   " does not preserve the symplectic form"});
      all_symplectic = false;
    }
  }
  if (!all_symplectic) return report;

  // Only meaningful once every image is symplectic (inverse letters are
  // computed symplectically).
  const IntMatrix value = evaluate_word(rep, base.relator());
  if (!value.is_identity()) {
    report.issues.push_back({ValidationIssue::Kind::relator, std::nullopt,
                             "the images violate the surface relation "
                             "[A1,B1]...[Ab,Bb] = I"});
  }
  return report;
}

IntMatrix evaluate_word(const SymplecticRep& rep, const Word& word) {
  IntMatrix out = IntMatrix::identity(2 * rep.fiber_genus);
  for (const Letter& l : word.letters()) {
    if (l.generator >= rep.images.size()) {
      throw ShapeError("word uses generator " + std::to_string(l.generator) +
                       " but the rep has " + std::to_string(rep.images.size()) +
                       " images");
    }
    const IntMatrix& m = rep.images[l.generator];
    out = l.exponent > 0 ? out * m : out * symplectic_inverse(m);
  }
  return out;
}

CoinvariantsReport coinvariants_of_images(const std::vector<IntMatrix>& images,
                                          std::size_t fiber_genus,
                                          std::size_t base_genus) {
  const std::size_t n = 2 * fiber_genus;
  IntMatrix stack(n, 0);
  const IntMatrix id = IntMatrix::identity(n);
  for (const IntMatrix& m : images) {
    if (m.rows() != n || m.cols() != n) {
      throw ShapeError("monodromy image has the wrong size for fiber genus " +
                       std::to_string(fiber_genus));
    }
    stack = IntMatrix::hstack(stack, m - id);
  }
  const CokernelStructure coker = cokernel_structure(stack);

  CoinvariantsReport report;
  report.fiber_genus = fiber_genus;
  report.base_genus = base_genus;
  report.rank = coker.free_rank;
  report.torsion = coker.torsion;
  report.b1 = 2 * base_genus + report.rank;
  if (report.rank % 2 == 0) {
    report.q_f = report.rank / 2;
    report.s = fiber_genus - report.rank / 2;
  }
  return report;
}

// --- BundleSpec ---------------------------------------------------------

BundleSpec::BundleSpec(Content content, std::optional<std::int64_t> signature,
                       bool has_zero_section, ProvenanceNode provenance)
    : content_(std::move(content)),
      signature_(signature),
      has_zero_section_(has_zero_section),
      provenance_(std::move(provenance)) {}

bool BundleSpec::is_explicit() const {
  return std::holds_alternative<SymplecticRep>(content_);
}
bool BundleSpec::is_generating_set() const {
  return std::holds_alternative<GeneratingSetRep>(content_);
}
bool BundleSpec::is_declared() const {
  return std::holds_alternative<DeclaredBlock>(content_);
}

const SymplecticRep& BundleSpec::rep() const {
  if (is_declared()) {
    throw DeclaredBlockUnsupported(
        "operation needs explicit monodromy, but this bundle is a declared "
        "invariant block");
  }
  if (is_generating_set()) {
    throw UnsupportedContent(
        "operation needs a standard-presentation rep, but this bundle's "
        "monodromy is indexed by a computed generating set");
  }
  return std::get<SymplecticRep>(content_);
}

const GeneratingSetRep& BundleSpec::generating_set() const {
  if (!is_generating_set()) {
    throw UnsupportedContent("bundle does not carry a generating-set rep");
  }
  return std::get<GeneratingSetRep>(content_);
}

const DeclaredBlock& BundleSpec::declared() const {
  if (!is_declared()) {
    throw UnsupportedContent("bundle is not a declared invariant block");
  }
  return std::get<DeclaredBlock>(content_);
}

std::size_t BundleSpec::fiber_genus() const {
  return std::visit([](const auto& c) { return c.fiber_genus; }, content_);
}

std::size_t BundleSpec::base_genus() const {
  return std::visit([](const auto& c) { return c.base_genus; }, content_);
}

ValidationReport validate_bundle(const BundleSpec& bundle) {
  if (bundle.is_explicit()) return validate_rep(bundle.rep());
  ValidationReport report;
  if (bundle.is_declared()) return report;  // nothing dynamic to check
  const GeneratingSetRep& rep = bundle.generating_set();
  const std::size_t n = 2 * rep.fiber_genus;
  for (std::size_t i = 0; i < rep.images.size(); ++i) {
    const IntMatrix& m = rep.images[i];
    if (m.rows() != n || m.cols() != n) {
      report.issues.push_back({ValidationIssue::Kind::shape, i,
                               "generating-set image " + std::to_string(i) +
                                   " is " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + ", expected " +
                                   std::to_string(n) + "x" +
                                   std::to_string(n)});
      continue;
    }
    if (!is_symplectic(m)) {
      report.issues.push_back({ValidationIssue::Kind::symplectic, i,
                               "generating-set image " + std::to_string(i) +
                                   " does not preserve the symplectic form"});
    }
  }
  return report;
}

CoinvariantsReport coinvariants(const BundleSpec& bundle) {
  if (bundle.is_declared()) {
    throw DeclaredBlockUnsupported(
        "coinvariants of a declared block are only known as an interval");
  }
  if (bundle.is_explicit()) {
    const SymplecticRep& r = bundle.rep();
    return coinvariants_of_images(r.images, r.fiber_genus, r.base_genus);
  }
  const GeneratingSetRep& r = bundle.generating_set();
  return coinvariants_of_images(r.images, r.fiber_genus, r.base_genus);
}

RankInterval rank_interval(const BundleSpec& bundle) {
  if (bundle.is_declared()) {
    const DeclaredBlock& d = bundle.declared();
    RankInterval out{d.coinv_rank_lo, d.coinv_rank_hi, d.rank_parity};
    if (out.lo == out.hi) {
      out.parity = out.lo % 2 == 0 ? RankParity::even : RankParity::odd;
    }
    return out;
  }
  const std::size_t r = coinvariants(bundle).rank;
  return RankInterval{r, r, r % 2 == 0 ? RankParity::even : RankParity::odd};
}

// --- constructors -------------------------------------------------------

namespace {

void throw_first_issue(const ValidationReport& report) {
  if (report.ok()) return;
  const ValidationIssue& issue = report.issues.front();
  switch (issue.kind) {
    case ValidationIssue::Kind::shape:
      throw ShapeError(issue.detail);
    case ValidationIssue::Kind::symplectic:
      throw SymplecticViolation(issue.detail);
    case ValidationIssue::Kind::relator:
      throw RelatorViolation(issue.detail);
  }
}

void check_declared_block(const DeclaredBlock& block) {
  if (block.fiber_genus < 1 || block.base_genus < 1) {
    throw InvalidSpec("declared block needs fiber and base genus >= 1");
  }
  if (block.coinv_rank_lo > block.coinv_rank_hi ||
      block.coinv_rank_hi > 2 * block.fiber_genus) {
    throw InvalidSpec(
        "declared rank interval must satisfy lo <= hi <= 2 * fiber genus");
  }
  if (block.rank_parity != RankParity::unknown) {
    bool reachable = false;
    for (std::size_t r = block.coinv_rank_lo; r <= block.coinv_rank_hi; ++r) {
      if ((r % 2 == 0) == (block.rank_parity == RankParity::even)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) {
      throw InvalidSpec(
          "declared rank parity is inconsistent with the declared interval");
    }
  }
}

// Pins the parity field when the interval is a single point.
DeclaredBlock normalized(DeclaredBlock block) {
  if (block.coinv_rank_lo == block.coinv_rank_hi) {
    block.rank_parity = block.coinv_rank_lo % 2 == 0 ? RankParity::even
                                                     : RankParity::odd;
  }
  return block;
}

ProvenanceNode explicit_leaf(const SymplecticRep& rep,
                             std::optional<std::int64_t> signature,
                             bool has_zero_section) {
  ProvenanceNode node;
  node.op = "explicit";
  node.rep = rep;
  node.leaf_signature = signature;
  node.leaf_has_zero_section = has_zero_section;
  return node;
}

ProvenanceNode declared_leaf(const DeclaredBlock& block,
                             std::optional<std::int64_t> signature,
                             bool has_zero_section) {
  ProvenanceNode node;
  node.op = "declared";
  node.block = block;
  node.leaf_signature = signature;
  node.leaf_has_zero_section = has_zero_section;
  return node;
}

RankParity parity_of(std::size_t value) {
  return value % 2 == 0 ? RankParity::even : RankParity::odd;
}

RankParity parity_sum(RankParity a, RankParity b) {
  if (a == RankParity::unknown || b == RankParity::unknown) {
    return RankParity::unknown;
  }
  return a == b ? RankParity::even : RankParity::odd;
}

}  // namespace

BundleSpec from_rep(SymplecticRep rep, std::optional<std::int64_t> signature,
                    bool has_zero_section) {
  throw_first_issue(validate_rep(rep));
  return from_rep_unchecked(std::move(rep), signature, has_zero_section);
}

BundleSpec from_rep_unchecked(SymplecticRep rep,
                              std::optional<std::int64_t> signature,
                              bool has_zero_section) {
  ProvenanceNode node = explicit_leaf(rep, signature, has_zero_section);
  return BundleSpec(std::move(rep), signature, has_zero_section,
                    std::move(node));
}

BundleSpec from_declared(DeclaredBlock block,
                         std::optional<std::int64_t> signature,
                         bool has_zero_section) {
  check_declared_block(block);
  block = normalized(block);
  ProvenanceNode node = declared_leaf(block, signature, has_zero_section);
  return BundleSpec(std::move(block), signature, has_zero_section,
                    std::move(node));
}

BundleSpec from_generating_set(GeneratingSetRep rep,
                               std::optional<std::int64_t> signature,
                               bool has_zero_section) {
  const std::size_t n = 2 * rep.fiber_genus;
  for (const IntMatrix& m : rep.images) {
    if (m.rows() != n || m.cols() != n) {
      throw ShapeError("generating-set image has the wrong size for fiber "
                       "genus " +
                       std::to_string(rep.fiber_genus));
    }
    if (!is_symplectic(m)) {
      throw SymplecticViolation(
          "generating-set image does not preserve the symplectic form");
    }
  }
  return from_generating_set_unchecked(std::move(rep), signature,
                                       has_zero_section);
}

BundleSpec from_generating_set_unchecked(GeneratingSetRep rep,
                                         std::optional<std::int64_t> signature,
                                         bool has_zero_section) {
  ProvenanceNode node;
  node.op = "generating_set";
  return BundleSpec(std::move(rep), signature, has_zero_section,
                    std::move(node));
}

// --- named building blocks ----------------------------------------------

BundleSpec product_block(std::size_t fiber_genus, std::size_t base_genus) {
  if (fiber_genus < 1 || base_genus < 1) {
    throw InvalidSpec("product block needs fiber and base genus >= 1");
  }
  SymplecticRep rep;
  rep.fiber_genus = fiber_genus;
  rep.base_genus = base_genus;
  rep.images.assign(2 * base_genus, IntMatrix::identity(2 * fiber_genus));
  ProvenanceNode node;
  node.op = "product";
  node.args["g"] = static_cast<std::int64_t>(fiber_genus);
  node.args["b"] = static_cast<std::int64_t>(base_genus);
  return BundleSpec(std::move(rep), 0, true, std::move(node));
}

namespace {

BundleSpec one_twist_block(const char* op, const IntMatrix& twist,
                           std::size_t base_genus) {
  if (base_genus < 1) {
    throw InvalidSpec(std::string(op) + " block needs base genus >= 1");
  }
  SymplecticRep rep;
  rep.fiber_genus = 1;
  rep.base_genus = base_genus;
  rep.images.assign(2 * base_genus, IntMatrix::identity(2));
  rep.images[0] = twist;
  ProvenanceNode node;
  node.op = op;
  node.args["b"] = static_cast<std::int64_t>(base_genus);
  return BundleSpec(std::move(rep), 0, true, std::move(node));
}

}  // namespace

BundleSpec trefoil_block(std::size_t base_genus) {
  return one_twist_block("trefoil", IntMatrix::from_rows({{1, 1}, {-1, 0}}),
                         base_genus);
}

BundleSpec kodaira_thurston_block(std::size_t base_genus) {
  return one_twist_block("kodaira_thurston",
                         IntMatrix::from_rows({{1, 1}, {0, 1}}), base_genus);
}

BundleSpec ekkos_block() {
  DeclaredBlock block;
  block.fiber_genus = 3;
  block.base_genus = 9;
  block.coinv_rank_lo = 0;
  block.coinv_rank_hi = 5;
  block.rank_parity = RankParity::unknown;
  ProvenanceNode node;
  node.op = "ekkos";
  return BundleSpec(block, 4, true, std::move(node));
}

// --- calculus -------------------------------------------------------------

BundleSpec section_sum(const BundleSpec& x, const BundleSpec& y) {
  if (x.is_generating_set() || y.is_generating_set()) {
    throw UnsupportedContent(
        "section sums need standard-presentation content; a cover "
        "restriction cannot be summed");
  }
  if (x.base_genus() != y.base_genus()) {
    throw BaseMismatch("section sum over different base genera " +
                       std::to_string(x.base_genus()) + " and " +
                       std::to_string(y.base_genus()));
  }
  if (!x.has_zero_section() || !y.has_zero_section()) {
    throw MissingSection("section sum needs zero sections on both summands");
  }

  ProvenanceNode node;
  node.op = "section_sum";
  node.children = {x.provenance(), y.provenance()};

  std::optional<std::int64_t> signature;
  if (x.signature() && y.signature()) signature = *x.signature() + *y.signature();

  if (x.is_explicit() && y.is_explicit()) {
    const SymplecticRep& rx = x.rep();
    const SymplecticRep& ry = y.rep();
    SymplecticRep rep;
    rep.fiber_genus = rx.fiber_genus + ry.fiber_genus;
    rep.base_genus = rx.base_genus;
    rep.images.reserve(rx.images.size());
    for (std::size_t i = 0; i < rx.images.size(); ++i) {
      rep.images.push_back(IntMatrix::direct_sum(rx.images[i], ry.images[i]));
    }
    return BundleSpec(std::move(rep), signature, true, std::move(node));
  }

  // At least one declared side: the sum is known through intervals only.
  const RankInterval ix = rank_interval(x);
  const RankInterval iy = rank_interval(y);
  DeclaredBlock block;
  block.fiber_genus = x.fiber_genus() + y.fiber_genus();
  block.base_genus = x.base_genus();
  block.coinv_rank_lo = ix.lo + iy.lo;
  block.coinv_rank_hi = ix.hi + iy.hi;
  block.rank_parity = parity_sum(ix.parity, iy.parity);
  block = normalized(block);
  check_declared_block(block);
  return BundleSpec(std::move(block), signature, true, std::move(node));
}

BundleSpec fiber_sum_with_product(const BundleSpec& x,
                                  std::size_t added_base_genus) {
  if (added_base_genus < 1) {
    throw InvalidSpec("fiber sum must add base genus >= 1");
  }
  if (x.is_generating_set()) {
    throw UnsupportedContent(
        "fiber sums need standard-presentation content; a cover restriction "
        "cannot be extended");
  }

  ProvenanceNode node;
  node.op = "fiber_sum_product";
  node.args["added_base_genus"] = static_cast<std::int64_t>(added_base_genus);
  node.children = {x.provenance()};

  if (x.is_explicit()) {
    SymplecticRep rep = x.rep();
    rep.base_genus += added_base_genus;
    const IntMatrix id = IntMatrix::identity(2 * rep.fiber_genus);
    rep.images.insert(rep.images.end(), 2 * added_base_genus, id);
    return BundleSpec(std::move(rep), x.signature(), x.has_zero_section(),
                      std::move(node));
  }
  DeclaredBlock block = x.declared();
  block.base_genus += added_base_genus;
  return BundleSpec(std::move(block), x.signature(), x.has_zero_section(),
                    std::move(node));
}

BundleSpec restrict_to_cover(const BundleSpec& x, const CyclicCoverSpec& spec) {
  if (x.is_declared()) {
    throw DeclaredBlockUnsupported(
        "cover restriction needs explicit monodromy matrices");
  }
  if (x.is_generating_set()) {
    throw UnsupportedContent(
        "iterated cover restrictions are not supported; restrict the "
        "original bundle instead");
  }
  const SymplecticRep& rep = x.rep();
  const SurfacePresentation base(rep.base_genus);
  const SchreierData data = schreier_data(base, spec);
  const std::size_t n = spec.degree;

  // Images of the transversal words once, then every Schreier generator
  // T_c x T_c'^-1 is two products instead of a word-length walk.
  std::vector<IntMatrix> fwd(n), inv(n);
  for (std::size_t c = 0; c < n; ++c) {
    fwd[c] = evaluate_word(rep, data.transversal[c]);
    inv[c] = symplectic_inverse(fwd[c]);
  }

  GeneratingSetRep out;
  out.fiber_genus = rep.fiber_genus;
  out.base_genus = cover_genus(n, rep.base_genus);
  out.images.reserve(data.entries.size());
  for (const SchreierEntry& e : data.entries) {
    const std::size_t c2 = (e.coset + spec.images[e.generator]) % n;
    out.images.push_back(fwd[e.coset] * rep.image(e.generator) * inv[c2]);
  }
  out.origin = "degree-" + std::to_string(n) + " cyclic cover of the genus-" +
               std::to_string(rep.base_genus) + " base";
  out.inherited_valid = true;

  std::optional<std::int64_t> signature;
  if (x.signature()) signature = static_cast<std::int64_t>(n) * *x.signature();

  ProvenanceNode node;
  node.op = "cover";
  node.args["degree"] = static_cast<std::int64_t>(n);
  node.cover_images = spec.images;
  node.children = {x.provenance()};
  return BundleSpec(std::move(out), signature, x.has_zero_section(),
                    std::move(node));
}

BundleSpec assume_rank_parity(const BundleSpec& x, RankParity parity) {
  if (parity == RankParity::unknown) {
    throw InvalidSpec("parity assumption must be even or odd");
  }
  if (!x.is_declared()) {
    throw UnsupportedContent(
        "parity assumptions apply to declared blocks; explicit content has "
        "a computable parity");
  }
  DeclaredBlock block = x.declared();
  if (block.rank_parity != RankParity::unknown &&
      block.rank_parity != parity) {
    throw InvalidSpec("assumed parity contradicts the declared parity");
  }
  const bool want_even = parity == RankParity::even;
  if ((block.coinv_rank_lo % 2 == 0) != want_even) ++block.coinv_rank_lo;
  if (block.coinv_rank_lo > block.coinv_rank_hi) {
    throw InvalidSpec("assumed parity is inconsistent with the declared "
                      "rank interval");
  }
  if ((block.coinv_rank_hi % 2 == 0) != want_even) --block.coinv_rank_hi;
  block.rank_parity = parity;

  ProvenanceNode node;
  node.op = "assume_rank_parity";
  node.parity = parity;
  node.children = {x.provenance()};
  return BundleSpec(std::move(block), x.signature(), x.has_zero_section(),
                    std::move(node));
}

// --- assembled families ---------------------------------------------------

BundleSpec build_z_gb(std::size_t fiber_genus, std::size_t base_genus,
                      RankParity assumed_parity) {
  if (fiber_genus < 4) {
    throw InvalidSpec("the declared-block pipeline needs fiber genus >= 4");
  }
  if (base_genus < 9) {
    throw InvalidSpec("the declared-block pipeline needs base genus >= 9");
  }
  if (assumed_parity == RankParity::unknown) {
    throw InvalidSpec("the declared-block pipeline needs a parity assumption");
  }

  BundleSpec z = assume_rank_parity(ekkos_block(), assumed_parity);
  std::size_t padding = fiber_genus - 3;
  if (assumed_parity == RankParity::odd) {
    // One unipotent block raises the rank by exactly 1, restoring even
    // parity before the trivial padding.
    z = section_sum(z, kodaira_thurston_block(9));
    padding = fiber_genus - 4;
  }
  if (padding > 0) {
    z = section_sum(z, product_block(padding, 9));
  }
  if (base_genus > 9) {
    z = fiber_sum_with_product(z, base_genus - 9);
  }
  return z;
}

BundleSpec build_w(std::size_t fiber_genus_plus_one, std::size_t base_genus,
                   RankParity assumed_parity) {
  if (fiber_genus_plus_one < 5) {
    throw InvalidSpec("the trefoil-augmented pipeline needs fiber genus >= 5");
  }
  BundleSpec z =
      build_z_gb(fiber_genus_plus_one - 1, base_genus, assumed_parity);
  return section_sum(z, trefoil_block(base_genus));
}

}  // namespace kodaira
