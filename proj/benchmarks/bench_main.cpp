// Microbenchmarks for the main pipelines: completion, complex construction,
// contraction, resolution assembly, series extraction, and the brute-force
// rank oracle.

#include <benchmark/benchmark.h>

#include <random>

#include "homres/hochschild.hpp"
#include "homres/oracle.hpp"
#include "homres/parse.hpp"
#include "homres/series.hpp"
#include "random_complex.hpp"
#include "systems.hpp"

using namespace homres;
using namespace testsys;

static void BM_parse(benchmark::State& state) {
  Ring ring{3, true, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_polynomial("x1^2 - 3/2*x2*x3 + x3^2", ring));
  }
}
BENCHMARK(BM_parse);

static void BM_buchberger(benchmark::State& state) {
  Ring r = comm_ring(3);
  std::vector<Polynomial> gens{parse_polynomial("x1^2 - x2 x3", r),
                               parse_polynomial("x2^2 - x1 x3", r),
                               parse_polynomial("x3^2", r)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, MonomialOrder{MonomialOrder::DegLex}));
  }
}
BENCHMARK(BM_buchberger);

static void BM_noncomm_complete(benchmark::State& state) {
  Ring r = word_ring(2);
  std::vector<Polynomial> gens{parse_polynomial("x1 x1 - x1 x2", r)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noncomm_complete(gens, MonomialOrder{MonomialOrder::DegLex}, state.range(0)));
  }
}
BENCHMARK(BM_noncomm_complete)->Arg(6)->Arg(10);

static void BM_normal_form(benchmark::State& state) {
  auto R = twisted_cubic();
  Polynomial p = parse_polynomial("x4 x3 x2 x1 x4 x3 x2 x1", R.ring());
  for (auto _ : state) benchmark::DoNotOptimize(R.normal_form(p));
}
BENCHMARK(BM_normal_form);

static void BM_normalized_bar(benchmark::State& state) {
  auto R = comm_quotient(2, {"x1^2", "x1 x2"});
  for (auto _ : state) benchmark::DoNotOptimize(normalized_bar(R, state.range(0), state.range(0)));
}
BENCHMARK(BM_normalized_bar)->Arg(4)->Arg(5);

static void BM_enumerate_chains(benchmark::State& state) {
  auto R = twisted_cubic();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_chains(R, Flavor::Anick, state.range(0), state.range(0)));
}
BENCHMARK(BM_enumerate_chains)->Arg(5)->Arg(7);

static void BM_build_resolution(benchmark::State& state) {
  auto R = twisted_cubic();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_resolution(R, Flavor::Anick, state.range(0), state.range(0)));
}
BENCHMARK(BM_build_resolution)->Arg(4)->Arg(5);

static void BM_morse_contraction(benchmark::State& state) {
  auto R = comm_quotient(2, {"x1^2", "x2^2"});
  BarComplex B = normalized_bar(R, 4, 4);
  Matching m = commutative_matching(B);
  QuotientElem one = QuotientElem::of_scalar(Scalar(1, R.ring().field), &R);
  for (auto _ : state) benchmark::DoNotOptimize(morse_complex(B.cx, m, one));
}
BENCHMARK(BM_morse_contraction);

static void BM_greedy_matching(benchmark::State& state) {
  std::mt19937 rng(7);
  auto cx = random_scalar_complex(rng);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_matching(cx, 11));
}
BENCHMARK(BM_greedy_matching);

static void BM_automaton_series(benchmark::State& state) {
  auto R = twisted_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(automaton_series(build_automaton(R)));
}
BENCHMARK(BM_automaton_series);

static void BM_series_truncate(benchmark::State& state) {
  auto S = automaton_series(build_automaton(twisted_cubic()));
  for (auto _ : state) benchmark::DoNotOptimize(series_truncate(S, state.range(0)));
}
BENCHMARK(BM_series_truncate)->Arg(8)->Arg(10);

static void BM_tor_oracle(benchmark::State& state) {
  auto R = comm_quotient(2, {"x1^2", "x1 x2"});
  for (auto _ : state)
    benchmark::DoNotOptimize(tor_residue_field(R, state.range(0), 2 * state.range(0)));
}
BENCHMARK(BM_tor_oracle)->Arg(3)->Arg(4);

static void BM_hochschild_resolution(benchmark::State& state) {
  auto R = exterior(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(hochschild_resolution(R, Flavor::Anick, 4, 4));
}
BENCHMARK(BM_hochschild_resolution);

BENCHMARK_MAIN();
