// Microbenchmarks for the hot paths: table construction from a presentation,
// homomorphism spaces, the all-orders stratification scan, the associated
// graded construction, and the bounded monomorphism search.

#include <benchmark/benchmark.h>

#include "quiverstrat/closure.hpp"
#include "quiverstrat/field.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/graded.hpp"
#include "quiverstrat/order_analysis.hpp"
#include "quiverstrat/presentation.hpp"
#include "quiverstrat/rep.hpp"
#include "quiverstrat/stratification.hpp"

namespace qs = quiverstrat;

static void BM_BuildTableRational(benchmark::State& state) {
  qs::Presentation p = qs::fixture("s4_5");
  for (auto _ : state) {
    auto t = qs::build_presentation(qs::RationalField{}, p);
    benchmark::DoNotOptimize(t->dim());
  }
}
BENCHMARK(BM_BuildTableRational);

static void BM_BuildTablePrime(benchmark::State& state) {
  qs::Presentation p = qs::fixture("s4_5");
  qs::PrimeField f2(2);
  for (auto _ : state) {
    auto t = qs::build_presentation(f2, p);
    benchmark::DoNotOptimize(t->dim());
  }
}
BENCHMARK(BM_BuildTablePrime);

static void BM_HomSpace(benchmark::State& state) {
  auto t = qs::build_presentation(qs::RationalField{}, qs::fixture("s4_2"));
  qs::Rep<qs::RationalField> px = qs::projective_rep(t, 0);
  qs::Rep<qs::RationalField> reg = qs::left_regular_rep(t);
  for (auto _ : state) {
    auto homs = qs::hom_space(px, reg);
    benchmark::DoNotOptimize(homs.size());
  }
}
BENCHMARK(BM_HomSpace);

static void BM_AllOrdersScan(benchmark::State& state) {
  auto t = qs::build_presentation(qs::RationalField{}, qs::fixture("s4_2"));
  for (auto _ : state) {
    qs::StratContext<qs::RationalField> ctx(t);  // cold caches each round
    auto rep = qs::all_orders_scan(ctx, true);
    benchmark::DoNotOptimize(rep.ss_all_orders);
  }
}
BENCHMARK(BM_AllOrdersScan);

static void BM_AssociatedGraded(benchmark::State& state) {
  auto t = qs::build_presentation(qs::RationalField{}, qs::fixture("ex1_10"));
  for (auto _ : state) {
    auto g = qs::associated_graded(t);
    benchmark::DoNotOptimize(g.component_dims());
  }
}
BENCHMARK(BM_AssociatedGraded);

static void BM_BoundedMonoSearch(benchmark::State& state) {
  qs::PrimeField f2(2);
  auto t = qs::build_presentation(f2, qs::fixture("s4_5"));
  qs::LinearOrder o = qs::parse_order(t->vertices, "x,y,z");
  for (auto _ : state) {
    qs::StratContext<qs::PrimeField> ctx(t);
    auto v = qs::bounded_mono_search(ctx, o);
    benchmark::DoNotOptimize(v.closed);
  }
}
BENCHMARK(BM_BoundedMonoSearch);

BENCHMARK_MAIN();
