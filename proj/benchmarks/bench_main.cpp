#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "posethom/chartab.hpp"
#include "posethom/gfpla.hpp"
#include "posethom/groupact.hpp"
#include "posethom/homology.hpp"
#include "posethom/poset.hpp"

using namespace posethom;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(POSETHOM_DATA_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void bm_schreier_sims_m24(benchmark::State& state) {
  const auto g = parse_group(slurp("groups/m24.json"));
  for (auto _ : state) benchmark::DoNotOptimize(group_order(g));
}
BENCHMARK(bm_schreier_sims_m24)->Unit(benchmark::kMillisecond);

void bm_unionfind_m24(benchmark::State& state) {
  const auto g = parse_group(slurp("groups/m24.json"));
  const auto spec = PosetSpec::boolean(24);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_count_unionfind(g, spec, k));
}
BENCHMARK(bm_unionfind_m24)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_burnside_s6(benchmark::State& state) {
  const auto g = parse_group(slurp("groups/s6.json"));
  const auto spec = PosetSpec::boolean(6);
  for (auto _ : state) benchmark::DoNotOptimize(burnside_counts(g, spec));
}
BENCHMARK(bm_burnside_s6)->Unit(benchmark::kMicrosecond);

// inclusion matrix of k-subsets in (k+1)-subsets of 12 points, mod 3
void bm_rank_boolean12(benchmark::State& state) {
  const Poset poset(PosetSpec::boolean(12));
  const int k = static_cast<int>(state.range(0));
  const auto m = power_boundary(poset, k + 1, 1, FieldSpec(3));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_boolean12)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_homology_scan(benchmark::State& state) {
  const Poset poset(PosetSpec::boolean(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const HomologyEngine engine(poset, FieldSpec(5));
    benchmark::DoNotOptimize(engine.scan());
  }
}
BENCHMARK(bm_homology_scan)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_sn_table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sn_table(n));
}
BENCHMARK(bm_sn_table)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
