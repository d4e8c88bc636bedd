// Acceptance checks for the whole pipeline: named building blocks, the
// construction calculus, cyclic covers, numerical invariants, and the
// exclusion verdicts. One line per criterion; exit code is the number of
// failures.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/meyer.hpp"
#include "kodaira/monodromy.hpp"
#include "kodaira/obstructions.hpp"
#include "kodaira/smith.hpp"
#include "support/oracles.hpp"

using namespace kodaira;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws std::runtime_error on failure
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

template <typename T, typename U>
void expect_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream out;
    out << what << ": got " << got << ", want " << want;
    throw std::runtime_error(out.str());
  }
}

const IntMatrix kTrefoil = IntMatrix::from_rows({{1, 1}, {-1, 0}});

// 1. Coinvariants of the named blocks.
void criterion_named_blocks() {
  const CoinvariantsReport trefoil = coinvariants(trefoil_block(9));
  expect_eq(trefoil.rank, 0, "trefoil coinvariant rank");
  expect(trefoil.torsion.empty(), "trefoil coinvariants have torsion");
  expect_eq(trefoil.b1, 18, "trefoil b1");

  for (std::size_t g : {2, 3, 5}) {
    const CoinvariantsReport product = coinvariants(product_block(g, 2));
    expect_eq(product.rank, 2 * g, "product coinvariant rank");
    expect(product.q_f == g, "product q_f");
    expect(product.s == 0, "product s");
  }

  const CoinvariantsReport nil = coinvariants(kodaira_thurston_block(9));
  expect_eq(nil.rank, 1, "nilmanifold block coinvariant rank");
  expect(!nil.q_f, "nilmanifold q_f must be undefined");
}

// 2. The trefoil matrix has order exactly 6, with cube -I.
void criterion_trefoil_order() {
  IntMatrix power = IntMatrix::identity(2);
  for (int k = 1; k <= 5; ++k) {
    power = power * kTrefoil;
    expect(!power.is_identity(),
           "trefoil matrix has order < 6 (power " + std::to_string(k) + ")");
  }
  expect(kTrefoil.pow(3) == -IntMatrix::identity(2),
         "trefoil cubed must be -identity");
  expect(kTrefoil.pow(6).is_identity(), "trefoil matrix must have order 6");
}

// 3. The degree-6 cover of the trefoil block trivializes the action.
void criterion_trefoil_cover() {
  const BundleSpec cover =
      restrict_to_cover(trefoil_block(9), twist_single_generator(6, 0, 18));
  expect_eq(cover.base_genus(), 49, "cover base genus");
  expect_eq(cover.generating_set().images.size(), 103,
            "cover generator count");
  const CoinvariantsReport report = coinvariants(cover);
  expect_eq(report.rank, 2, "cover coinvariant rank");
  expect(report.torsion.empty(), "cover coinvariants have torsion");
}

// 4. The declared fiber-genus-g family: invariants, and the exact genus
// where the irregularity bound starts to bite.
void criterion_declared_family() {
  for (const RankParity parity : {RankParity::even, RankParity::odd}) {
    const BundleSpec z = build_z_gb(20, 9, parity);
    expect(z.signature() == 4, "family signature");
    expect(z.has_zero_section(), "family zero section");
    expect(rank_interval(z) == RankInterval{34, 38, RankParity::even},
           "family rank interval");
  }
  const Verdict at20 = run_verdict(build_z_gb(20, 9, RankParity::even));
  expect(at20.excluded, "fiber genus 20 must be excluded");
  expect(at20.find("xiao-bound")->status == Status::excluded,
         "fiber genus 20 must fail the irregularity bound");
  const Verdict at19 = run_verdict(build_z_gb(19, 9, RankParity::even));
  expect(!at19.excluded, "fiber genus 19 must survive");
}

// 5. The explicit fiber-genus-13 bundle passes the direct bound but a
// degree-6 cyclic cover of the base exposes it.
void criterion_cover_sweep_witness() {
  const BundleSpec w = section_sum(
      section_sum(section_sum(kodaira_thurston_block(9),
                              kodaira_thurston_block(9)),
                  product_block(10, 9)),
      trefoil_block(9));
  expect_eq(w.fiber_genus(), 13, "fiber genus");
  const CoinvariantsReport direct = coinvariants(w);
  expect_eq(direct.rank, 22, "coinvariant rank");
  expect(direct.s == 2, "s");
  expect(check_xiao(13, direct).status == Status::passed,
         "direct irregularity bound must pass (13 <= 13)");

  const BundleSpec cover =
      restrict_to_cover(w, twist_single_generator(6, 0, 18));
  const CoinvariantsReport pulled = coinvariants(cover);
  expect_eq(pulled.rank, 24, "cover coinvariant rank");
  expect(pulled.s == 1, "cover s");
  expect(check_xiao(13, pulled).status == Status::excluded,
         "cover irregularity bound must exclude (13 > 7)");

  const Verdict verdict = run_verdict(w);
  expect(verdict.excluded, "sweep must exclude the bundle");
  const ObstructionOutcome* sweep = verdict.find("cover-sweep");
  expect(sweep != nullptr && sweep->status == Status::excluded,
         "cover-sweep outcome must be the excluding one");
  expect(sweep->detail.find("degree-6") != std::string::npos &&
             sweep->detail.find("a1") != std::string::npos,
         "witness must be the degree-6 cover twisting a1");
  expect(verdict.find("xiao-bound")->status == Status::passed,
         "direct bound must still pass inside the verdict");
}

// 6. Characteristic numbers and the chi window.
void criterion_characteristic_numbers() {
  expect(admissible_chi(3, 2).empty(), "no chi fits at fiber genus 3");
  expect(admissible_chi(4, 2).empty(), "no chi fits at fiber genus 4");
  expect(admissible_chi(5, 2) == std::vector<std::int64_t>{5},
         "exactly chi = 5 at fiber genus 5 over base 2");
  const ChernInvariants inv = chern_invariants(5, 2, 5);
  expect_eq(inv.e, 16, "euler number");
  expect_eq(inv.sigma, 4, "signature");
  expect_eq(inv.k2, 44, "K^2");
  expect(inv.slope == mpq_class(11, 4), "slope must be 11/4");
}

// 7. The irregularity bound at its boundary.
void criterion_irregularity_boundary() {
  expect(check_xiao(7, std::size_t{1}).status == Status::passed,
         "g = 7, s = 1 sits on the bound");
  expect(check_xiao(8, std::size_t{1}).status == Status::excluded,
         "g = 8, s = 1 violates the bound");
}

// 8. Homologically trivial monodromy is recognized as a product.
void criterion_homology_product() {
  const Verdict verdict = run_verdict(product_block(3, 2));
  expect(verdict.excluded, "trivial monodromy must be excluded");
  const ObstructionOutcome* torelli = verdict.find("torelli-product");
  expect(torelli != nullptr && torelli->status == Status::excluded,
         "the product check must fire");
  expect(torelli->detail.find("product") != std::string::npos,
         "the detail must name the product structure");
}

// 9. Property suites: normal form, cocycle, signature divisibility.
void criterion_property_suites() {
  std::mt19937_64 rng(20260819);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int iter = 0; iter < 50; ++iter) {
    const IntMatrix m =
        kodaira::testing::random_matrix(rng, dim(rng), dim(rng), 9);
    const SmithDecomposition snf = smith_normal_form(m);
    expect(snf.u * m * snf.v == snf.d, "U m V != D");
    const mpz_class du = snf.u.determinant();
    const mpz_class dv = snf.v.determinant();
    expect(du == 1 || du == -1, "U must be unimodular");
    expect(dv == 1 || dv == -1, "V must be unimodular");
    const std::vector<mpz_class> diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] != 0) {
        expect(diag[i] != 0 && diag[i + 1] % diag[i] == 0,
               "diagonal must form a divisibility chain");
      }
    }
    expect_eq(rank(m), kodaira::testing::rank_oracle(m),
              "normal-form rank vs elimination rank");
  }

  for (int iter = 0; iter < 15; ++iter) {
    const IntMatrix a = kodaira::testing::random_symplectic(rng, 2);
    const IntMatrix b = kodaira::testing::random_symplectic(rng, 2);
    const IntMatrix c = kodaira::testing::random_symplectic(rng, 2);
    expect(meyer_tau(a, b) + meyer_tau(a * b, c) ==
               meyer_tau(a, b * c) + meyer_tau(b, c),
           "cocycle identity");
    expect(meyer_tau(a, symplectic_inverse(a)) == 0, "tau(a, a^-1) != 0");
  }

  for (int iter = 0; iter < 5; ++iter) {
    const SymplecticRep rep = kodaira::testing::random_valid_rep(rng, 2, 2);
    expect(bundle_signature(rep) % 4 == 0,
           "bundle signature must be divisible by 4");
  }
  expect(bundle_signature(trefoil_block(9).rep()) == 0,
         "trefoil block signature");
  expect(bundle_signature(product_block(2, 2).rep()) == 0,
         "product block signature");
}

// 10. The declared genus-5 surface over a genus-2 base survives every
// check, with the conjectural bound only ever conditional.
void criterion_small_declared_survivor() {
  DeclaredBlock block;
  block.fiber_genus = 5;
  block.base_genus = 2;
  block.coinv_rank_lo = 8;
  block.coinv_rank_hi = 8;
  const BundleSpec bundle = from_declared(block, 4, true);

  CheckConfig config;
  config.chi = 5;
  const Verdict base = run_verdict(bundle, config);
  expect(!base.excluded, "must not be excluded");
  expect(base.find("modified-xiao") == nullptr,
         "conjectural bound must be opt-in");
  expect(base.find("chi-window")->status == Status::passed,
         "chi = 5 must pass the window");

  config.enable_modified_xiao = true;
  const Verdict with = run_verdict(bundle, config);
  expect(!with.excluded,
         "the conjectural bound must never flip the verdict");
  const ObstructionOutcome* conditional = with.find("modified-xiao");
  expect(conditional != nullptr &&
             conditional->status == Status::conditional,
         "2 q_f = 8 > 7 = g + 2 must be reported conditionally");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"named-block coinvariants", criterion_named_blocks},
      {"trefoil matrix has order 6", criterion_trefoil_order},
      {"degree-6 cover of the trefoil block", criterion_trefoil_cover},
      {"declared family and the genus-20 threshold",
       criterion_declared_family},
      {"cover sweep exposes the genus-13 bundle",
       criterion_cover_sweep_witness},
      {"characteristic numbers and chi window",
       criterion_characteristic_numbers},
      {"irregularity bound boundary", criterion_irregularity_boundary},
      {"homology products are excluded", criterion_homology_product},
      {"property suites (normal form, cocycle, signature)",
       criterion_property_suites},
      {"declared genus-5 survivor", criterion_small_declared_survivor},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      note = e.what();
    }
    if (note.empty()) {
      std::printf("PASS  %2zu  %s\n", i + 1, criteria[i].name.c_str());
    } else {
      ++failures;
      std::printf("FAIL  %2zu  %s: %s\n", i + 1, criteria[i].name.c_str(),
                  note.c_str());
    }
  }
  return failures;
}
