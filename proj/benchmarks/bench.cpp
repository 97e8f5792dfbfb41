#include <benchmark/benchmark.h>

#include <vector>

#include "hsgas/bounds.hpp"
#include "hsgas/combinatorics.hpp"
#include "hsgas/geometry.hpp"
#include "hsgas/gtable.hpp"
#include "hsgas/rng.hpp"

namespace {

void BM_SamplePointInUnitBall(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  hsgas::RandomStream stream(12345);
  std::vector<double> out(static_cast<std::size_t>(d));
  for (auto _ : state) {
    hsgas::sample_point_in_unit_ball(d, stream, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_SamplePointInUnitBall)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Arg(8);

void BM_EstimateGTilde(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto est = hsgas::estimate_g_tilde(2, k, 100000, 42, 10000, 0.95, 1);
    benchmark::DoNotOptimize(est.mean);
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_EstimateGTilde)->Arg(2)->Arg(3)->Arg(5);

hsgas::GTildeTable paper_like_table() {
  hsgas::GTildeTable table;
  table.d = 2;
  const double values[] = {1.0, 1.0, 0.41349667156634407, 0.0589, 0.0013, 0.0001};
  for (int k = 0; k < 6; ++k) {
    hsgas::GTildeEntry entry;
    entry.k = k;
    entry.value = values[k];
    entry.source = hsgas::Source::exact;
    entry.exact_form = "fixture";
    table.entries.push_back(entry);
  }
  table.k_max = 5;
  table.truncation_note = "fixture";
  return table;
}

void BM_CPolynomial(benchmark::State& state) {
  const auto table = paper_like_table();
  double a = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hsgas::c_polynomial(table, a, hsgas::Mode::mean));
  }
}
BENCHMARK(BM_CPolynomial);

void BM_OptimizeA(benchmark::State& state) {
  const auto table = paper_like_table();
  for (auto _ : state) {
    auto result = hsgas::optimize_a(table, hsgas::Mode::mean, 1000.0);
    benchmark::DoNotOptimize(result.bound);
  }
}
BENCHMARK(BM_OptimizeA);

void BM_CayleyCount(benchmark::State& state) {
  hsgas::DegreeSequence degrees{5, 4, 2, 2, 1, 1, 1, 1, 1, 1, 1};  // n=11, sum=20
  for (auto _ : state) {
    benchmark::DoNotOptimize(hsgas::cayley_count(degrees));
  }
}
BENCHMARK(BM_CayleyCount);

void BM_PruferEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto histogram = hsgas::prufer_enumerate(n);
    benchmark::DoNotOptimize(histogram.size());
  }
}
BENCHMARK(BM_PruferEnumerate)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
