#include <benchmark/benchmark.h>

#include "smtc/axioms.hpp"
#include "smtc/catalog.hpp"
#include "smtc/indicators.hpp"

namespace {

void BM_EpinIndicator(benchmark::State& state) {
  smtc::SuperMTC C = smtc::catalog_category("u1_5").category;
  smtc::FermionicAction A = smtc::catalog_action("u1_5_epin", C);
  for (auto _ : state) {
    auto r = smtc::indicator_epin(C, A);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_EpinIndicator);

void BM_FSymbolLookup(benchmark::State& state) {
  smtc::SuperMTC C = smtc::catalog_category("so3_3").category;
  const int n = C.size();
  for (auto _ : state) {
    smtc::cplx acc = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f) acc += C.f1(a, b, c, d, e, f);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FSymbolLookup);

void BM_PentagonCheck(benchmark::State& state) {
  smtc::SuperMTC C = smtc::catalog_category("u1_20").category;
  for (auto _ : state) {
    auto rep = smtc::check_pentagon(C);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_PentagonCheck);

}  // namespace

BENCHMARK_MAIN();
