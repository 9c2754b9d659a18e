#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <cliffexp/cliffexp.hpp>

using namespace cliffexp;

namespace {

std::vector<Multivector> inputs(Signature sig, std::size_t n = 256) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Multivector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Multivector::Coeffs c;
    for (double& v : c) v = u(rng);
    out.emplace_back(sig, c);
  }
  return out;
}

void BM_Exp(benchmark::State& state) {
  const auto sig = kAllSignatures[static_cast<std::size_t>(state.range(0))];
  const auto xs = inputs(sig);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp(xs[i++ % xs.size()]));
  }
  state.SetLabel(std::string(signature_name(sig)));
}
BENCHMARK(BM_Exp)->DenseRange(0, 3);

void BM_ExpSeries(benchmark::State& state) {
  const auto xs = inputs(Signature::Cl30);
  const int terms = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_eval(xs[i++ % xs.size()], {SeriesFamily::Exp, terms}));
  }
}
BENCHMARK(BM_ExpSeries)->Arg(6)->Arg(20)->Arg(40);

void BM_Product(benchmark::State& state) {
  const auto xs = inputs(Signature::Cl21);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % xs.size()] * xs[(i + 1) % xs.size()]);
    ++i;
  }
}
BENCHMARK(BM_Product);

void BM_Inverse(benchmark::State& state) {
  const auto xs = inputs(Signature::Cl30);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_Inverse);

void BM_Tanh(benchmark::State& state) {
  const auto xs = inputs(Signature::Cl30);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_exact(xs[i++ % xs.size()], RatioKind::Tanh));
  }
}
BENCHMARK(BM_Tanh);

void BM_SpinSweep(benchmark::State& state) {
  spin::RampSweep sweep;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spin::sweep_ramp(sweep, 1, spin::SweepMode::Adiabatic,
                                              static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_SpinSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
