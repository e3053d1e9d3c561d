// Microbenchmarks for the hot paths: exact discriminants, mod-p splitting,
// item classification, census shards, and the finite weight transforms.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "recip/census.hpp"
#include "recip/classify.hpp"
#include "recip/disc_identities.hpp"
#include "recip/fourier.hpp"
#include "recip/intpoly.hpp"
#include "recip/reciprocal.hpp"
#include "recip/rng.hpp"
#include "recip/splitting.hpp"

using namespace recip;

namespace {

IntPoly random_poly(Rng& rng, int deg, long height) {
  std::vector<mpz_class> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = static_cast<long>(rng.uniform(-height, height));
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

void bm_discriminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<IntPoly> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(expand(random_poly(rng, n, 50), n).f);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(discriminant(pool[i]));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(bm_discriminant)->Arg(2)->Arg(3)->Arg(5);

void bm_expand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  std::vector<IntPoly> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_poly(rng, n, 50));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(pool[i], n));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(bm_expand)->Arg(3)->Arg(5);

void bm_splitting_mod_p(benchmark::State& state) {
  Rng rng(3);
  std::vector<IntPoly> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_poly(rng, 6, 1000));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(splitting_type_mod_p(pool[i], 10007));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(bm_splitting_mod_p);

void bm_classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<IntPoly> pool;
  while (pool.size() < 64) {
    IntPoly f = expand(random_poly(rng, n, 20), n).f;
    if (discriminant(f) != 0) pool.push_back(f);
  }
  ClassifyBudgets budgets;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(pool[i], budgets));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(bm_classify)->Arg(2)->Arg(3);

void bm_census_box(benchmark::State& state) {
  const long H = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run_census(2, H, false));
  state.SetItemsProcessed(state.iterations() * (2 * H + 1) * (2 * H + 1) * (2 * H + 1));
}
BENCHMARK(bm_census_box)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_double_disc(benchmark::State& state) {
  Rng rng(5);
  std::vector<std::vector<mpz_class>> pool;
  for (int i = 0; i < 64; ++i) {
    std::vector<mpz_class> b(3);
    for (auto& v : b) v = static_cast<long>(rng.uniform(-8, 8));
    if (b.back() == 0) b.back() = 3;
    pool.push_back(b);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fzn_R_identity_check(pool[i]));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(bm_double_disc);

void bm_weight_transform(benchmark::State& state) {
  SplittingType sigma = SplittingType::of({{1, 1}, {1, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(transform_check(5, 2, sigma, false, false));
}
BENCHMARK(bm_weight_transform)->Unit(benchmark::kMicrosecond);

void bm_exact_dft(benchmark::State& state) {
  const int ncoords = static_cast<int>(state.range(0));
  std::uint64_t size = 1;
  for (int i = 0; i < ncoords; ++i) size *= 3;
  std::vector<Cyclotomic> table;
  table.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i)
    table.push_back(Cyclotomic::from_rational(3, mpq_class(static_cast<long>(i % 7), 7)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_dft(3, ncoords, table, -1));
  state.SetItemsProcessed(state.iterations() * size);
}
BENCHMARK(bm_exact_dft)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
