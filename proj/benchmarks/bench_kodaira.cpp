#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "kodaira/int_matrix.hpp"
#include "kodaira/meyer.hpp"
#include "kodaira/monodromy.hpp"
#include "kodaira/smith.hpp"

namespace {

using namespace kodaira;

IntMatrix random_dense(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<std::vector<mpz_class>> data(rows, std::vector<mpz_class>(cols));
  for (auto& row : data) {
    for (auto& v : row) v = entry(rng);
  }
  return IntMatrix::from_rows(data);
}

// Symplectic transvection along an integer vector v: x -> x - <v, x> v,
// realized as I - v v^T J.
IntMatrix transvection(const std::vector<long>& v) {
  const std::size_t n = v.size();
  IntMatrix column(n, 1, [&] {
    std::vector<mpz_class> entries;
    for (long x : v) entries.emplace_back(x);
    return entries;
  }());
  const IntMatrix outer = column * column.transpose();
  return IntMatrix::identity(n) - outer * symplectic_form(n / 2);
}

IntMatrix random_symplectic(std::size_t genus, std::uint64_t seed,
                            std::size_t factors) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-2, 2);
  IntMatrix m = IntMatrix::identity(2 * genus);
  for (std::size_t k = 0; k < factors; ++k) {
    std::vector<long> v(2 * genus);
    for (auto& x : v) x = entry(rng);
    m = m * transvection(v);
  }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_dense(20, 20, 0xfeedbeef);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm);

void BM_Coinvariants(benchmark::State& state) {
  const BundleSpec bundle = section_sum(
      section_sum(section_sum(kodaira_thurston_block(9),
                              kodaira_thurston_block(9)),
                  product_block(10, 9)),
      trefoil_block(9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coinvariants(bundle));
  }
}
BENCHMARK(BM_Coinvariants);

void BM_CoverRestrict(benchmark::State& state) {
  const BundleSpec trefoil = trefoil_block(9);
  const CyclicCoverSpec spec = twist_single_generator(6, 0, 18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(restrict_to_cover(trefoil, spec));
  }
}
BENCHMARK(BM_CoverRestrict);

void BM_MeyerTau(benchmark::State& state) {
  const IntMatrix a = random_symplectic(3, 17, 6);
  const IntMatrix b = random_symplectic(3, 99, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(meyer_tau(a, b));
  }
}
BENCHMARK(BM_MeyerTau);

void BM_BundleSignature(benchmark::State& state) {
  const BundleSpec trefoil = trefoil_block(9);
  const SymplecticRep& rep = trefoil.rep();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bundle_signature(rep));
  }
}
BENCHMARK(BM_BundleSignature);

}  // namespace

BENCHMARK_MAIN();
