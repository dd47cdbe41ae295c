// Sparse measures against their dense mirrors across densities: the point
// where materializing the full grid stops paying off.

#include <benchmark/benchmark.h>

#include "softhybrid/measures.hpp"
#include "softhybrid/oracle.hpp"

using namespace softhybrid;

namespace {

SoftHybridSet sized_set(std::int64_t side, double density, std::uint64_t salt = 0) {
  return oracle::random_set(0x5eed + side + salt, Variant::fpfs, std::size_t(side),
                            std::size_t(side), density, 10);
}

void SparseCardinality(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  for (auto _ : state) {
    CardinalPair c = cardinality(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(SparseCardinality)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void DenseCardinality(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  for (auto _ : state) {
    auto c = oracle::measure(oracle::MeasureKind::card, {s});
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(DenseCardinality)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void SparseEntropyGrid(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  for (auto _ : state) {
    MeasurePair e = entropy(s, EvaluationDomain::grid);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(SparseEntropyGrid)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void DenseEntropyGrid(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  for (auto _ : state) {
    auto e = oracle::measure(oracle::MeasureKind::entropy, {s},
                             EvaluationDomain::grid);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(DenseEntropyGrid)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void SparseSimilarity(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  SoftHybridSet t = sized_set(state.range(0), double(state.range(1)) / 10.0, 1000);
  for (auto _ : state) {
    MeasurePair m = similarity(s, t);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(SparseSimilarity)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void DenseSimilarity(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), double(state.range(1)) / 10.0);
  SoftHybridSet t = sized_set(state.range(0), double(state.range(1)) / 10.0, 1000);
  for (auto _ : state) {
    auto m = oracle::measure(oracle::MeasureKind::sim, {s, t});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(DenseSimilarity)->ArgsProduct({{16, 64, 256}, {1, 5, 10}});

void SetUnion(benchmark::State& state) {
  SoftHybridSet s = sized_set(state.range(0), 0.3);
  SoftHybridSet t = sized_set(state.range(0), 0.3, 1000);
  for (auto _ : state) {
    SoftHybridSet u = union_of(s, t);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(SetUnion)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
