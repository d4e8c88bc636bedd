#include <doctest.h>

#include "kodaira/errors.hpp"
#include "kodaira/monodromy.hpp"
#include "kodaira/obstructions.hpp"

using namespace kodaira;

TEST_CASE("characteristic numbers") {
  const ChernInvariants inv = chern_invariants(5, 2, 5);
  CHECK(inv.chi == 5);
  CHECK(inv.e == 16);
  CHECK(inv.sigma == 4);
  CHECK(inv.k2 == 44);
  CHECK(inv.slope == mpq_class(11, 4));
  CHECK_THROWS_AS(chern_invariants(1, 2, 5), InvalidSpec);
  CHECK_THROWS_AS(chern_invariants(5, 1, 5), InvalidSpec);
}

TEST_CASE("admissible chi windows") {
  CHECK(admissible_chi(3, 2).empty());
  CHECK(admissible_chi(4, 2).empty());
  CHECK(admissible_chi(5, 2) == std::vector<std::int64_t>{5});
  CHECK(admissible_chi(7, 2) == std::vector<std::int64_t>{7});
  const std::vector<std::int64_t> big = admissible_chi(13, 9);
  REQUIRE(big.size() == 31);  // (b-1)(g-1) = 96: integers in (96, 128)
  CHECK(big.front() == 97);
  CHECK(big.back() == 127);
}

TEST_CASE("genus bounds") {
  CHECK(check_genus_bounds(3, 2).status == Status::passed);
  CHECK(check_genus_bounds(2, 2).status == Status::excluded);
  CHECK(check_genus_bounds(3, 1).status == Status::excluded);
  CHECK(check_genus_bounds(1, 1).status == Status::excluded);
}

TEST_CASE("rank parity") {
  CHECK(check_rank_parity({34, 38, RankParity::even}, 9).status ==
        Status::passed);
  CHECK(check_rank_parity({1, 1, RankParity::odd}, 9).status ==
        Status::excluded);
  CHECK(check_rank_parity({0, 5, RankParity::unknown}, 9).status ==
        Status::inconclusive);
}

TEST_CASE("homology product detection") {
  CHECK(check_torelli_product(product_block(3, 2)).status == Status::excluded);
  CHECK(check_torelli_product(product_block(3, 2)).detail.find("product") !=
        std::string::npos);
  CHECK(check_torelli_product(trefoil_block(9)).status == Status::passed);
  CHECK(check_torelli_product(ekkos_block()).status == Status::inconclusive);

  DeclaredBlock pinned;
  pinned.fiber_genus = 3;
  pinned.base_genus = 9;
  pinned.coinv_rank_lo = 6;
  pinned.coinv_rank_hi = 6;
  const BundleSpec declared_product =
      from_declared(pinned, std::nullopt, false);
  CHECK(check_torelli_product(declared_product).status == Status::excluded);
}

TEST_CASE("irregularity bound") {
  CHECK(check_xiao(7, std::size_t{1}).status == Status::passed);
  CHECK(check_xiao(8, std::size_t{1}).status == Status::excluded);
  CHECK(check_xiao(3, std::size_t{0}).status == Status::excluded);

  CoinvariantsReport report;
  report.fiber_genus = 8;
  report.rank = 14;
  report.q_f = 7;
  report.s = 1;
  CHECK(check_xiao(8, report).status == Status::excluded);
  report.rank = 13;
  report.q_f.reset();
  report.s.reset();
  CHECK_THROWS_AS(check_xiao(8, report), ParityUndefined);

  CHECK(check_xiao_interval(20, 1, 3).status == Status::excluded);
  CHECK(check_xiao_interval(19, 1, 3).status == Status::inconclusive);
  CHECK(check_xiao_interval(7, 1, 3).status == Status::passed);
}

TEST_CASE("chi window") {
  CHECK(check_chi_window(13, 9, 100).status == Status::passed);
  CHECK(check_chi_window(13, 9, 96).status == Status::excluded);
  CHECK(check_chi_window(13, 9, 128).status == Status::excluded);
  const ObstructionOutcome open_window = check_chi_window(13, 9, std::nullopt);
  CHECK(open_window.status == Status::inconclusive);
  CHECK(open_window.detail.find("97") != std::string::npos);
  // Narrow geometry leaves no integer chi at all.
  CHECK(check_chi_window(3, 2, std::nullopt).status == Status::excluded);
  CHECK(check_chi_window(3, 2, 3).status == Status::excluded);
}

TEST_CASE("signature positivity") {
  CHECK(check_signature_positivity(4).status == Status::passed);
  CHECK(check_signature_positivity(0).status == Status::excluded);
  CHECK(check_signature_positivity(-4).status == Status::excluded);
  CHECK(check_signature_positivity(std::nullopt).status ==
        Status::inconclusive);
}

TEST_CASE("conjectural irregularity bound stays conditional") {
  CHECK(check_modified_xiao(13, 11, 11).status == Status::conditional);
  CHECK(check_modified_xiao(13, 7, 7).status == Status::passed);
  CHECK(check_modified_xiao(13, 7, 11).status == Status::inconclusive);
}

TEST_CASE("cover sweep finds parity witnesses") {
  CheckConfig config;
  config.cover_degrees = {2};
  const ObstructionOutcome out =
      cover_sweep(kodaira_thurston_block(9), config);
  CHECK(out.status == Status::excluded);
  CHECK(out.detail.find("degree-2") != std::string::npos);
  CHECK(out.detail.find("a1") != std::string::npos);
}

TEST_CASE("cover sweep passes harmless bundles") {
  CheckConfig config;
  config.cover_degrees = {2, 3};
  const ObstructionOutcome out = cover_sweep(trefoil_block(9), config);
  CHECK(out.status == Status::passed);
  CHECK_FALSE(out.warning);
}

TEST_CASE("cover sweep is inconclusive for non-explicit content") {
  CheckConfig config;
  CHECK(cover_sweep(ekkos_block(), config).status == Status::inconclusive);
}

TEST_CASE("exhaustive sweep respects its cap") {
  // Fiber 5 over base 2, one order-6 block: every cover keeps the bound.
  SymplecticRep rep;
  rep.fiber_genus = 5;
  rep.base_genus = 2;
  const IntMatrix top = IntMatrix::from_rows({{1, 1}, {-1, 0}});
  rep.images = {IntMatrix::direct_sum(top, IntMatrix::identity(8)),
                IntMatrix::identity(10), IntMatrix::identity(10),
                IntMatrix::identity(10)};
  const BundleSpec bundle = from_rep(rep, std::nullopt, true);

  CheckConfig config;
  config.cover_degrees = {2};
  config.cover_strategy = CheckConfig::CoverStrategy::exhaustive_capped;
  config.exhaustive_cap = 3;
  const ObstructionOutcome capped = cover_sweep(bundle, config);
  CHECK(capped.status == Status::inconclusive);
  CHECK(capped.warning);

  config.exhaustive_cap = 15;  // 2^4 - 1 surjective vectors: exactly enough
  const ObstructionOutcome full = cover_sweep(bundle, config);
  CHECK(full.status == Status::passed);
  CHECK_FALSE(full.warning);

  CheckConfig bad;
  bad.cover_degrees = {0};
  CHECK_THROWS_AS(cover_sweep(bundle, bad), InvalidSpec);
}

TEST_CASE("full verdicts") {
  // Small fiber genus: excluded by the genus bound alone.
  const Verdict trefoil = run_verdict(trefoil_block(9));
  CHECK(trefoil.excluded);
  CHECK(trefoil.overall() == "excluded");
  REQUIRE(trefoil.find("genus-bounds") != nullptr);
  CHECK(trefoil.find("genus-bounds")->status == Status::excluded);

  // The trivial bundle trips several checks at once.
  const Verdict product = run_verdict(product_block(3, 2));
  CHECK(product.excluded);
  CHECK(product.find("torelli-product")->status == Status::excluded);
  CHECK(product.find("xiao-bound")->status == Status::excluded);
  CHECK(product.find("signature-positivity")->status == Status::excluded);

  // The declared fiber-genus-20 family dies on the irregularity bound.
  const Verdict z20 = run_verdict(build_z_gb(20, 9, RankParity::even));
  CHECK(z20.excluded);
  CHECK(z20.find("xiao-bound")->status == Status::excluded);

  // One genus lower survives every check.
  const Verdict z19 = run_verdict(build_z_gb(19, 9, RankParity::even));
  CHECK_FALSE(z19.excluded);
  CHECK(z19.overall() == "not-excluded");
  CHECK(z19.find("cover-sweep")->status == Status::inconclusive);

  // Unknown parity: the parity check stays open, but every even rank in
  // [0, 5] gives s in [1, 3], so the irregularity bound holds regardless.
  const Verdict unknown = run_verdict(ekkos_block());
  CHECK(unknown.find("rank-parity")->status == Status::inconclusive);
  CHECK(unknown.find("xiao-bound")->status == Status::passed);

  // An odd point interval admits no even rank at all; the bound cannot
  // even be framed there (parity already excludes).
  const Verdict nil = run_verdict(kodaira_thurston_block(9));
  CHECK(nil.excluded);
  CHECK(nil.find("rank-parity")->status == Status::excluded);
  CHECK(nil.find("xiao-bound")->status == Status::inconclusive);
}

TEST_CASE("verdict warnings surface in the exit contract") {
  SymplecticRep rep;
  rep.fiber_genus = 5;
  rep.base_genus = 2;
  const IntMatrix top = IntMatrix::from_rows({{1, 1}, {-1, 0}});
  rep.images = {IntMatrix::direct_sum(top, IntMatrix::identity(8)),
                IntMatrix::identity(10), IntMatrix::identity(10),
                IntMatrix::identity(10)};
  const BundleSpec bundle = from_rep(rep, std::nullopt, true);

  CheckConfig config;
  config.cover_degrees = {2};
  config.cover_strategy = CheckConfig::CoverStrategy::exhaustive_capped;
  config.exhaustive_cap = 3;
  const Verdict verdict = run_verdict(bundle, config);
  CHECK_FALSE(verdict.excluded);
  CHECK(verdict.has_warnings);
}

TEST_CASE("modified bound is opt-in and never excludes") {
  DeclaredBlock block;
  block.fiber_genus = 5;
  block.base_genus = 2;
  block.coinv_rank_lo = 8;
  block.coinv_rank_hi = 8;
  const BundleSpec bundle = from_declared(block, 4, true);

  CheckConfig config;
  config.chi = 5;
  Verdict base = run_verdict(bundle, config);
  CHECK_FALSE(base.excluded);
  CHECK(base.find("modified-xiao") == nullptr);

  config.enable_modified_xiao = true;
  Verdict with = run_verdict(bundle, config);
  CHECK_FALSE(with.excluded);
  REQUIRE(with.find("modified-xiao") != nullptr);
  CHECK(with.find("modified-xiao")->status == Status::conditional);
  CHECK(with.find("chi-window")->status == Status::passed);
}
