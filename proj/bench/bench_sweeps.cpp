// Serial reference against the OpenMP sweep on the heavier checks.

#include <benchmark/benchmark.h>

#include "wedgegroup/modular.hpp"
#include "wedgegroup/reconstruction.hpp"
#include "wedgegroup/sampling.hpp"
#include "wedgegroup/sweep.hpp"

namespace {

const wg::ReflectionMap& map()
{
  static const wg::ReflectionMap j = wg::builtin_map({wg::MapKind::Tautological, {}});
  return j;
}

void BM_Homomorphism(benchmark::State& state)
{
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::verify_homomorphism(map(), 500, 42, 1e-8, threads));
  }
}
BENCHMARK(BM_Homomorphism)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Translations(benchmark::State& state)
{
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::verify_translations(map(), 500, 42, 1e-8, threads));
  }
}
BENCHMARK(BM_Translations)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Modular(benchmark::State& state)
{
  std::vector<wg::AlgebraVector> pairs;
  for (std::uint64_t i = 0; i < 20; ++i) {
    wg::Sampler s(42, 13, i);
    pairs.push_back(wg::random_block_instance(s, 8));
  }
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wg::verify_modular_relations(pairs, {}, 1e-8, threads));
  }
}
BENCHMARK(BM_Modular)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepKernel(benchmark::State& state)
{
  const int threads = static_cast<int>(state.range(0));
  const wg::SampleKernel kernel = [](std::size_t i, std::span<double> out) {
    wg::Sampler s(1, 0, i);
    const wg::LorentzElement l = s.lorentz(3.0);
    const wg::PolarData p = wg::polar_decompose(l);
    out[0] = (p.rotation.matrix() * p.boost.matrix() - l.matrix()).norm();
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(threads == 0 ? wg::sweep_serial(20000, 1, kernel)
                                          : wg::sweep_parallel(20000, 1, kernel, threads));
  }
}
BENCHMARK(BM_SweepKernel)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
