#include <benchmark/benchmark.h>

#include <complex>

#include "eulerx/characters.hpp"
#include "eulerx/ffield.hpp"
#include "eulerx/hurwitz.hpp"
#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"
#include "eulerx/products.hpp"

namespace {

using cd = std::complex<double>;

void BM_Sieve(benchmark::State& state) {
  const auto limit = std::uint64_t(state.range(0));
  for (auto _ : state) {
    // defeat the process-wide cache by asking for distinct limits
    static std::uint64_t bump = 0;
    benchmark::DoNotOptimize(eulerx::primes_up_to(limit + (bump++ % 2)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sieve)->Range(1 << 16, 1 << 24)->Complexity();

void BM_HurwitzZeta(benchmark::State& state) {
  const cd s(0.5, double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eulerx::hurwitz_zeta(s, 1.0 / 3.0));
}
BENCHMARK(BM_HurwitzZeta)->Arg(0)->Arg(10)->Arg(100);

void BM_LValue(benchmark::State& state) {
  const auto chi = eulerx::chi_7a();
  const cd s(0.5, 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(eulerx::l_value(s, chi));
}
BENCHMARK(BM_LValue);

void BM_PartialProduct(benchmark::State& state) {
  const auto chi = eulerx::chi_3();
  const double x = double(state.range(0));
  eulerx::primes_up_to(std::uint64_t(x));  // sieve outside the loop
  for (auto _ : state)
    benchmark::DoNotOptimize(eulerx::partial_product(cd(0.5, 0.0), chi, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartialProduct)->Range(1 << 10, 1 << 22)->Complexity();

void BM_FFPartialProduct(benchmark::State& state) {
  const auto f = eulerx::fq_parse("5:2,0,1");
  const auto g = eulerx::ff_max_order_element(f).first;
  const auto chi = eulerx::ff_character(f, {{g, 1}}, 2);
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(eulerx::ff_partial_product(chi, cd(0.5, 0.0), n));
}
BENCHMARK(BM_FFPartialProduct)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
