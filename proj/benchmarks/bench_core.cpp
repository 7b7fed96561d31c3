#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "zdk/coeffs.hpp"
#include "zdk/model.hpp"
#include "zdk/sievesim.hpp"
#include "zdk/special.hpp"
#include "zdk/symfunc.hpp"
#include "zdk/zerostats.hpp"

using namespace zdk;

namespace {

symfunc::SatakeVector sample_vector(int m) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  std::vector<std::complex<double>> a(static_cast<std::size_t>(m));
  double s = 0;
  for (int j = 0; j + 1 < m; ++j) {
    const double t = u(rng);
    s += t;
    a[static_cast<std::size_t>(j)] = std::polar(1.0, t);
  }
  a.back() = std::polar(1.0, -s);
  return symfunc::SatakeVector(a);
}

}  // namespace

static void BM_SchurBialternant(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto sv = sample_vector(m);
  const auto parts = symfunc::Partition::all_up_to(8, m);
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(symfunc::schur_bialternant(sv, p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(parts.size()));
}
BENCHMARK(BM_SchurBialternant)->DenseRange(2, 5);

static void BM_SchurTableau(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto sv = sample_vector(m);
  const auto parts = symfunc::Partition::all_up_to(8, m);
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(symfunc::schur_tableau_oracle(sv, p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(parts.size()));
}
BENCHMARK(BM_SchurTableau)->DenseRange(2, 4);

static void BM_Hurwitz(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::hurwitz_zeta({0.5, t}, 0.3));
}
BENCHMARK(BM_Hurwitz)->Arg(10)->Arg(100)->Arg(1000);

static void BM_BuildMuTable(benchmark::State& state) {
  const auto model = random_unitary_model(3, 7);
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coeffs::build_table(model, coeffs::Kind::mu, N));
}
BENCHMARK(BM_BuildMuTable)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_HaarSampling(benchmark::State& state) {
  sievesim::EnsembleSpec spec;
  spec.m = static_cast<int>(state.range(0));
  spec.count = 10000;
  for (auto _ : state) benchmark::DoNotOptimize(sievesim::sample_haar_satake(spec));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_HaarSampling)->Arg(2)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_StarDiscrepancy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& x : pts) x = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(zerostats::star_discrepancy(pts));
}
BENCHMARK(BM_StarDiscrepancy)->Arg(1000)->Arg(100000);
BENCHMARK_MAIN();
