#include <benchmark/benchmark.h>

#include "ibistk/bsgs.hpp"
#include "ibistk/catalog.hpp"

using namespace ibistk;

static void BM_SchreierSims(benchmark::State& state, const char* name) {
  PermGroup g = catalog_group(name);
  for (auto _ : state) {
    Bsgs b = Bsgs::build(g);
    benchmark::DoNotOptimize(b.order());
  }
}
BENCHMARK_CAPTURE(BM_SchreierSims, psl2_8, "psl2:8");
BENCHMARK_CAPTURE(BM_SchreierSims, alt7_15, "alt7:15");
BENCHMARK_CAPTURE(BM_SchreierSims, diag_psl2_4, "diag:psl2:4:2");
BENCHMARK_CAPTURE(BM_SchreierSims, diag_psl2_8, "diag:psl2:8:2");

static void BM_Sift(benchmark::State& state) {
  Bsgs b = Bsgs::build(catalog_group("diag:psl2:8:2"));
  std::vector<Perm> elems;
  {
    auto gens = b.generators();
    Perm p = gens[0];
    for (int i = 0; i < 64; ++i) {
      p = compose(p, gens[i % gens.size()]);
      elems.push_back(p);
    }
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.contains(elems[i++ % elems.size()]));
  }
}
BENCHMARK(BM_Sift);

static void BM_PointStabilizer(benchmark::State& state) {
  Bsgs b = Bsgs::build(catalog_group("diag:psl2:8:2"));
  for (auto _ : state) {
    Bsgs stab = b.stabilizer_of(0);
    benchmark::DoNotOptimize(stab.order());
  }
}
BENCHMARK(BM_PointStabilizer);

static void BM_ElementEnumeration(benchmark::State& state) {
  Bsgs b = Bsgs::build(catalog_group("psl2:16"));
  for (auto _ : state) {
    auto stream = element_enumeration(b);
    long count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ElementEnumeration);
