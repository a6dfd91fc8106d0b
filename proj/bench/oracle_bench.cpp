// Serial vs OpenMP candidate scan of the brute-force radical-equality oracle.

#include <benchmark/benchmark.h>

#include "stci/parse.hpp"
#include "stci/verify.hpp"

namespace {

using namespace stci;

struct Instance {
  RadTarget lhs;
  RadTarget rhs;
};

// ker(X -> t) against its Frobenius certificate over GF(2)[t^2,t^3]
Instance frobenius_instance() {
  Config cfg;
  RingSpec R = parse_ring("GF(2)[t^2,t^3]");
  UniPoly gen = parse_poly("X^2 + t^2", R, cfg);
  PrimeIdeal ker = classify_kernel(R, parse_element("t", normalization_of(R).target, cfg));
  return {RadTarget{IdealPresentation{R, true, {gen}}}, RadTarget{ker}};
}

// two principal ideals over GF(2)[t], a denser coefficient slice
Instance principal_instance() {
  Config cfg;
  RingSpec R = parse_ring("GF(2)[t]");
  UniPoly a = parse_poly("X^2 + t^2", R, cfg);
  UniPoly b = parse_poly("X + t", R, cfg);
  return {RadTarget{IdealPresentation{R, true, {a}}},
          RadTarget{IdealPresentation{R, true, {b}}}};
}

void BM_OracleSerial(benchmark::State& state) {
  Config cfg;
  cfg.oracle_budget = 1ull << 24;
  Instance inst = state.range(0) == 0 ? frobenius_instance() : principal_instance();
  unsigned cap = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    OracleResult r = oracle_small_serial(inst.lhs, inst.rhs, cap, cfg);
    benchmark::DoNotOptimize(r.equal);
  }
}

void BM_OracleParallel(benchmark::State& state) {
  Config cfg;
  cfg.oracle_budget = 1ull << 24;
  Instance inst = state.range(0) == 0 ? frobenius_instance() : principal_instance();
  unsigned cap = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    OracleResult r = oracle_small(inst.lhs, inst.rhs, cap, cfg);
    benchmark::DoNotOptimize(r.equal);
  }
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Args({0, 3})->Args({1, 2})->Args({1, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Args({0, 3})->Args({1, 2})->Args({1, 3})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
