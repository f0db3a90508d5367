// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "bchcert/bch.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/oracle.hpp"
#include "bchcert/poly.hpp"

using namespace bchcert;

namespace {

constexpr std::uint64_t kBudget = std::uint64_t{1} << 32;

void BM_Search(benchmark::State& state) {
  auto code = build_code(3, 80, 7);
  for (auto _ : state) benchmark::DoNotOptimize(search_certificate(code, kBudget));
}

void BM_SearchSerial(benchmark::State& state) {
  auto code = build_code(3, 80, 7);
  for (auto _ : state) benchmark::DoNotOptimize(search_certificate_serial(code, kBudget));
}

void BM_FullOracle(benchmark::State& state) {
  auto code = build_code(4, 15, 5);  // 4^9 messages
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_full(*code));
}

void BM_FullOracleSerial(benchmark::State& state) {
  auto code = build_code(4, 15, 5);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_full_serial(*code));
}

void BM_SupportOracle(benchmark::State& state) {
  auto code = build_code(3, 26, 5);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_support(*code, 5, kBudget, parallel));
}

// x^16 - x^15 + 1 over GF(2^16)
Polynomial l_poly() {
  std::vector<std::int64_t> c(17, 0);
  c[0] = 1;
  c[15] = -1;
  c[16] = 1;
  return Polynomial::from_ints(Field::build(2, 16), c);
}

void BM_Roots(benchmark::State& state) {
  const auto f = l_poly();
  for (auto _ : state) benchmark::DoNotOptimize(roots_in_field(f));
}

void BM_RootsSerial(benchmark::State& state) {
  const auto f = l_poly();
  for (auto _ : state) benchmark::DoNotOptimize(roots_in_field_serial(f));
}

}  // namespace

BENCHMARK(BM_Search)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullOracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullOracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportOracle)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Roots)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
