// Serial reference versus OpenMP kernels: exhaustive point counting and line-parallel batches.

#include <sstream>

#include <benchmark/benchmark.h>

#include "g2euler/batch.hpp"

namespace {

using namespace g2euler;

Genus1ModelFp sample_cubic(u64 p) {
  PrimeField F(p);
  return {F, from_ints(F, {7, 3, 1, 1})};
}

Genus1ModelFp2 sample_cubic_fp2(u64 p) {
  Rng rng(5);
  QuadField K(p, 0, p - find_nonsquare(p, rng));  // z^2 - s
  return {K, from_ints(K, {7, 3, 1, 1})};
}

void BM_CountSerial(benchmark::State& state) {
  const auto m = sample_cubic(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_naive_serial(m));
}

void BM_CountParallel(benchmark::State& state) {
  const auto m = sample_cubic(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_naive(m));
}

void BM_CountSerialFp2(benchmark::State& state) {
  const auto m = sample_cubic_fp2(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_naive_serial(m));
}

void BM_CountParallelFp2(benchmark::State& state) {
  const auto m = sample_cubic_fp2(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points_naive(m));
}

std::string batch_input() {
  std::ostringstream os;
  Rng rng(11);
  std::uint64_t seed = 0;
  for (int i = 0; i < 64; ++i)
    for (ClusterType t : {ClusterType::T1, ClusterType::T2a, ClusterType::T2b, ClusterType::T4}) {
      OracleOptions oo;
      oo.compute_expected = false;
      os << to_job_line(random_instance(t, random_odd_prime(1000, 1 << 20, rng), 8, seed++, oo)) << '\n';
    }
  return os.str();
}

void BM_Batch(benchmark::State& state) {
  static const std::string input = batch_input();
  BatchOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  opts.stable = true;
  for (auto _ : state) {
    std::istringstream in(input);
    std::ostringstream out, diag;
    benchmark::DoNotOptimize(run_batch(in, out, diag, opts));
  }
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(4099)->Arg(65521);
BENCHMARK(BM_CountParallel)->Arg(4099)->Arg(65521);
BENCHMARK(BM_CountSerialFp2)->Arg(127)->Arg(251);
BENCHMARK(BM_CountParallelFp2)->Arg(127)->Arg(251);
BENCHMARK(BM_Batch)->Arg(1)->Arg(0);

BENCHMARK_MAIN();
