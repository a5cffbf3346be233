#include <benchmark/benchmark.h>

#include "ibistk/bsgs.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/spectrum_search.hpp"

using namespace ibistk;

static void BM_Spectrum(benchmark::State& state, const char* name) {
  Bsgs b = Bsgs::build(catalog_group(name));
  for (auto _ : state) {
    Spectrum s = irredundant_spectrum(b);
    benchmark::DoNotOptimize(s.sizes.size());
  }
}
BENCHMARK_CAPTURE(BM_Spectrum, sym6_sets2, "sym:6:sets:2");
BENCHMARK_CAPTURE(BM_Spectrum, alt7_15, "alt7:15");
BENCHMARK_CAPTURE(BM_Spectrum, diag_psl2_4, "diag:psl2:4:2");
BENCHMARK_CAPTURE(BM_Spectrum, diag_alt5_sym2, "diag:alt:5:2:top=sym:2");

static void BM_IbisVerdict(benchmark::State& state, const char* name) {
  Bsgs b = Bsgs::build(catalog_group(name));
  for (auto _ : state) {
    IbisVerdict v = is_ibis(b);
    benchmark::DoNotOptimize(v.is_ibis);
  }
}
BENCHMARK_CAPTURE(BM_IbisVerdict, diag_psl2_8, "diag:psl2:8:2");
BENCHMARK_CAPTURE(BM_IbisVerdict, prod_sym5, "prod:sym:5:2");

static void BM_MinimalBase(benchmark::State& state, const char* name) {
  Bsgs b = Bsgs::build(catalog_group(name));
  for (auto _ : state) {
    MinimalBase mb = minimal_base_size(b);
    benchmark::DoNotOptimize(mb.size);
  }
}
BENCHMARK_CAPTURE(BM_MinimalBase, sym6_sets2, "sym:6:sets:2");
BENCHMARK_CAPTURE(BM_MinimalBase, prod_sym5, "prod:sym:5:2");

BENCHMARK_MAIN();
