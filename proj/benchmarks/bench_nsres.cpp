#include <benchmark/benchmark.h>

#include <vector>

#include "nsres/apery.hpp"
#include "nsres/assoc_graded.hpp"
#include "nsres/kunz.hpp"
#include "nsres/m4.hpp"
#include "nsres/oracle.hpp"
#include "nsres/ring.hpp"
#include "nsres/semigroup.hpp"
#include "nsres/series.hpp"

namespace {

nsres::NumericalSemigroup NS(std::vector<unsigned long> g) {
  return nsres::NumericalSemigroup::from_generators(std::move(g));
}

void BM_AperyTail(benchmark::State& state) {
  std::vector<unsigned long> gens{static_cast<unsigned long>(state.range(0)),
                                  static_cast<unsigned long>(state.range(0)) + 3,
                                  static_cast<unsigned long>(state.range(0)) * 2 + 1};
  for (auto _ : state) {
    auto S = nsres::NumericalSemigroup::from_generators(gens);
    benchmark::DoNotOptimize(S.apery_tail());
  }
}
BENCHMARK(BM_AperyTail)->Arg(8)->Arg(32)->Arg(128);

void BM_KunzPoset(benchmark::State& state) {
  auto S = nsres::NumericalSemigroup::from_generators(
      {static_cast<unsigned long>(state.range(0)),
       static_cast<unsigned long>(state.range(0)) + 1,
       static_cast<unsigned long>(state.range(0)) * 3 - 2});
  for (auto _ : state) {
    auto P = nsres::kunz_poset(S);
    benchmark::DoNotOptimize(P.covers());
  }
}
BENCHMARK(BM_KunzPoset)->Arg(8)->Arg(24)->Arg(64);

void BM_ToricGenerators(benchmark::State& state) {
  auto S = nsres::NumericalSemigroup::from_generators(
      {static_cast<unsigned long>(state.range(0)),
       static_cast<unsigned long>(state.range(0)) + 1,
       static_cast<unsigned long>(state.range(0)) * 2 - 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::toric_generators(S));
}
BENCHMARK(BM_ToricGenerators)->Arg(6)->Arg(12)->Arg(24);

void BM_AperyDifferential(benchmark::State& state) {
  auto S = NS({5, 6, 19});
  auto d = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::apery_differential(S, d));
}
BENCHMARK(BM_AperyDifferential)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckComplex(benchmark::State& state) {
  auto S = NS({static_cast<unsigned long>(state.range(0)),
               static_cast<unsigned long>(state.range(0)) + 1,
               static_cast<unsigned long>(state.range(0)) + 3});
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::check_complex(S, 4));
}
BENCHMARK(BM_CheckComplex)->Arg(4)->Arg(5)->Arg(6);

void BM_BettiViaTensor(benchmark::State& state) {
  auto S = NS({4, 13, 31});
  auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::betti_via_tensor(S, D));
}
BENCHMARK(BM_BettiViaTensor)->Arg(3)->Arg(4)->Arg(5);

void BM_TruncatedHomology(benchmark::State& state) {
  auto S = NS({4, 5, 7});
  auto d = static_cast<unsigned long>(state.range(0));
  nsres::Int N = nsres::default_homology_bound(S, d);
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::truncated_homology(S, d, N));
}
BENCHMARK(BM_TruncatedHomology)->Arg(1)->Arg(2)->Arg(3);

void BM_M4Resolution(benchmark::State& state) {
  auto S = NS({4, 5, 7});
  auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::m4_resolution(S, D));
}
BENCHMARK(BM_M4Resolution)->Arg(3)->Arg(5)->Arg(7);

void BM_OracleBettiK(benchmark::State& state) {
  auto S = NS({4, 5, 7});
  auto i_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::oracle_betti_k(S, i_max));
}
BENCHMARK(BM_OracleBettiK)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_OracleBettiIdeal(benchmark::State& state) {
  auto S = NS({4, 5, 7});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        nsres::oracle_betti_ideal(S, nsres::GradedKind::Qmin,
                                  static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_OracleBettiIdeal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_InitialIdeal(benchmark::State& state) {
  auto S = NS({8, 9, 10, 12, 23});
  auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::initial_ideal_truncated(S, D));
}
BENCHMARK(BM_InitialIdeal)->Arg(4)->Arg(6)->Arg(8);

void BM_GrBetti(benchmark::State& state) {
  auto S = NS({5, 6, 19});
  auto i_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::gr_betti_k(S, i_max, 6));
}
BENCHMARK(BM_GrBetti)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GolodCheck(benchmark::State& state) {
  auto S = NS({4, 5, 6, 7});
  auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::golod_check(S, D));
}
BENCHMARK(BM_GolodCheck)->Arg(6)->Arg(10);

void BM_SymbolicSubstitute(benchmark::State& state) {
  auto S = NS({4, 5, 7});
  auto M = nsres::nonci_symbolic(S, static_cast<unsigned long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(nsres::substitute(M, S));
}
BENCHMARK(BM_SymbolicSubstitute)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
