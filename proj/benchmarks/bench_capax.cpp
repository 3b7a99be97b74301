#include <benchmark/benchmark.h>

#include "capax/bounds.hpp"
#include "capax/capacity.hpp"
#include "capax/oracle.hpp"

namespace {

using namespace capax;

void BM_CompleteKE(benchmark::State& state) {
  const elliptic::Modulus k(0.7479575920067657);
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::elliptic_pair(k));
}
BENCHMARK(BM_CompleteKE);

void BM_SnCnDn(benchmark::State& state) {
  const elliptic::Modulus k(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::jacobi_sncndn(0.8, k));
}
BENCHMARK(BM_SnCnDn);

// Moduli on both sides of the nome / complementary switch.
void BM_ThetaQuad(benchmark::State& state) {
  const elliptic::Modulus k(static_cast<double>(state.range(0)) / 1000.0);
  const double u = 0.4 * elliptic::complete_K(k);
  for (auto _ : state) benchmark::DoNotOptimize(elliptic::theta_quad(u, k));
}
BENCHMARK(BM_ThetaQuad)->Arg(300)->Arg(900)->Arg(999);

void BM_CapacityExact(benchmark::State& state) {
  const IntervalPair ip(-0.1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(capacity_exact(ip));
}
BENCHMARK(BM_CapacityExact);

void BM_BoundsReport(benchmark::State& state) {
  const IntervalPair ip(-0.1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(bounds::bounds_report(ip));
}
BENCHMARK(BM_BoundsReport);

void BM_Leja(benchmark::State& state) {
  const IntervalPair ip(-0.6, 0.6);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::leja_capacity_estimate(ip, n));
}
BENCHMARK(BM_Leja)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
