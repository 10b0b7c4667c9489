#include "csl4/counting.hpp"
#include "csl4/cubic3.hpp"
#include "csl4/enumerate.hpp"

#include <benchmark/benchmark.h>

using namespace csl4;

namespace {

IntMatrix sample_matrix() {
  return IntMatrix{{12, -7, 3, 40}, {5, 9, -11, 2}, {-6, 14, 8, 1}, {3, 0, 17, -9}, {21, 4, -2, 6}, {0, 13, 5, -8}};
}

Rot4 sample_rotation() { return build_rotation(PrimitiveQuat(3, 1, 1, 0), PrimitiveQuat(1, 1, 3, 0)); }

void BM_HnfColumns(benchmark::State& st) {
  const IntMatrix m = sample_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(span_basis(m));
}
BENCHMARK(BM_HnfColumns);

void BM_Snf(benchmark::State& st) {
  const IntMatrix m = sample_matrix();
  for (auto _ : st) benchmark::DoNotOptimize(elementary_divisors(m));
}
BENCHMARK(BM_Snf);

void BM_CslF(benchmark::State& st) {
  const Rot4 r = sample_rotation();
  for (auto _ : st) benchmark::DoNotOptimize(csl(LatticeKind::F, r));
}
BENCHMARK(BM_CslF);

void BM_CslP(benchmark::State& st) {
  const Rot4 r = sample_rotation();
  for (auto _ : st) benchmark::DoNotOptimize(csl(LatticeKind::P, r));
}
BENCHMARK(BM_CslP);

void BM_DoubleCosetF(benchmark::State& st) {
  const QuatPair x{{1, 2, 3, 4}, {3, 1, 1, 0}};
  pair_group(GroupName::CGF);
  for (auto _ : st) benchmark::DoNotOptimize(double_coset(x, GroupName::CGF));
}
BENCHMARK(BM_DoubleCosetF)->Unit(benchmark::kMillisecond);

void BM_PairStabilizerF(benchmark::State& st) {
  const SmallQuat p{3, 1, 1, 0}, q{1, 1, 3, 0};
  for (auto _ : st) benchmark::DoNotOptimize(h_of_pair(p, q, GroupName::CGF));
}
BENCHMARK(BM_PairStabilizerF);

void BM_CountReport(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(count_report(Int(st.range(0))));
}
BENCHMARK(BM_CountReport)->Arg(105)->Arg(1155);

void BM_CatalogF(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_catalog(Int(st.range(0)), LatticeKind::F));
}
BENCHMARK(BM_CatalogF)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Classify3(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(classify3(Int(st.range(0))));
}
BENCHMARK(BM_Classify3)->Arg(21)->Arg(45)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
