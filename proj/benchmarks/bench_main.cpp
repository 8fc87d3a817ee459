#include <benchmark/benchmark.h>

#include "fusionlim/bilim/bilimit.hpp"
#include "fusionlim/bilim/generate.hpp"
#include "fusionlim/coh/bar.hpp"
#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/rep/hom.hpp"
#include "fusionlim/rep/module.hpp"

using namespace fusionlim;

namespace {

void BM_BarResolution(benchmark::State& state, const char* group, unsigned p, std::size_t n) {
  const auto g = grp::named_group(group);
  for (auto _ : state) benchmark::DoNotOptimize(coh::BarResolution::build(g, p, n));
}

void BM_Cohomology(benchmark::State& state, const char* group, unsigned p, std::size_t n) {
  const auto g = grp::named_group(group);
  for (auto _ : state) {
    coh::CohomologyStore store;
    benchmark::DoNotOptimize(store.get(g, p, n));
  }
}

void BM_CartanEilenberg(benchmark::State& state, const char* group, unsigned p, std::size_t n) {
  const auto g = grp::named_group(group);
  for (auto _ : state) {
    coh::CohomologyStore store;
    benchmark::DoNotOptimize(coh::verify_cartan_eilenberg(g, p, n, store));
  }
}

void BM_TransporterCategory(benchmark::State& state, const char* group, unsigned p) {
  const auto g = grp::named_group(group);
  const auto s = grp::sylow(g, p).subgroup;
  for (auto _ : state) benchmark::DoNotOptimize(fincat::build_transporter_category(g, s));
}

void BM_HomLimitRegular(benchmark::State& state, const char* group) {
  const auto g = grp::named_group(group);
  const auto s = grp::sylow(g, 2).subgroup;
  const auto m = rep::regular_module(g, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(rep::hom_limit_over_transporter(g, s, m, m, false));
}

void BM_GeneratedFamily(benchmark::State& state) {
  const auto family = bilim::generated_family();
  for (auto _ : state)
    for (const auto& d : family) benchmark::DoNotOptimize(bilim::summarize_bilimit(d));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BarResolution, A4_p2_n4, "A4", 2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BarResolution, S4_p2_n3, "S4", 2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, A4_p2_n4, "A4", 2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, S4_p2_n3, "S4", 2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, S3_p3_n4, "S3", 3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CartanEilenberg, A4_p2_n4, "A4", 2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CartanEilenberg, S4_p2_n3, "S4", 2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TransporterCategory, S4_p2, "S4", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HomLimitRegular, A4, "A4")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratedFamily)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
