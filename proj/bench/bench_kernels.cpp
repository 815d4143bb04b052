// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "etaq/scanner.hpp"
#include "etaq/sieve.hpp"

using namespace etaq;

namespace {

const EtaQuotientSpec rr1 = EtaQuotientSpec::single(5, 5, 1, -1);
const EtaQuotientSpec mixed =
    EtaQuotientSpec::from_terms(35, {{5, 1, -1, 1}, {7, 3, -2, 1}, {35, 4, -1, 1}});

Series operand(std::size_t K) { return expand(rr1, K).coeffs; }

void BM_series_mul_serial(benchmark::State& state) {
  auto K = static_cast<std::size_t>(state.range(0));
  auto a = operand(K);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::series_mul(a, a, K));
}

void BM_series_mul_parallel(benchmark::State& state) {
  auto K = static_cast<std::size_t>(state.range(0));
  auto a = operand(K);
  for (auto _ : state)
    benchmark::DoNotOptimize(series_mul(a, a, K));
}

void BM_expand_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::expand(mixed, static_cast<std::size_t>(state.range(0))));
}

void BM_expand_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(expand(mixed, static_cast<std::size_t>(state.range(0))));
}

void BM_sieve_all_t_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::sieve_all_t(rr1, state.range(0)));
}

void BM_sieve_all_t_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sieve_all_t(rr1, state.range(0)));
}

void BM_find_congruences_serial(benchmark::State& state) {
  auto e = expand(rr1, 20000);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::find_congruences(e, state.range(0), 2));
}

void BM_find_congruences_parallel(benchmark::State& state) {
  auto e = expand(rr1, 20000);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_congruences(e, state.range(0), 2));
}

} // namespace

BENCHMARK(BM_series_mul_serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_mul_parallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand_serial)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand_parallel)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_all_t_serial)->Arg(98)->Arg(490)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_all_t_parallel)->Arg(98)->Arg(490)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_congruences_serial)->Arg(98)->Arg(490)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_congruences_parallel)->Arg(98)->Arg(490)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
