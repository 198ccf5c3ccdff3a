#include <benchmark/benchmark.h>

#include "llv/clifford.hpp"
#include "llv/filtration.hpp"
#include "llv/fixtures.hpp"
#include "llv/lie_algebra.hpp"
#include "llv/llv_ops.hpp"

using namespace llv;

namespace {

const BogomolovModel& model(int n) {
  static const BogomolovModel m2 = bogomolov_model(QuadraticForm::parse("diag:1,1,1,-1,-1"), 2);
  static const BogomolovModel m3 = bogomolov_model(QuadraticForm::parse("diag:1,1,1,-1,-1"), 3);
  return n == 2 ? m2 : m3;
}

const LlvGenerators& k3_generators() {
  static const LlvGenerators g = llv_generators(k3_ring(k3_form()));
  return g;
}

void BM_LieClosure(benchmark::State& st) {
  const auto& gens = k3_generators().matrices;
  for (auto _ : st) benchmark::DoNotOptimize(lie_closure(gens).dim());
}

void BM_LieClosureSerial(benchmark::State& st) {
  const auto& gens = k3_generators().matrices;
  for (auto _ : st) benchmark::DoNotOptimize(lie_closure_serial(gens).dim());
}

CliffordElement pair_product(const CliffordAlgebra& c) { return cl_multiply(c.blade(1), c.blade(2)); }

void BM_PolarizationGram(benchmark::State& st) {
  auto c = clifford(QuadraticForm::parse("diag:1,1,-1,-1,-1,-1,-1,-1"));
  auto a = pair_product(*c);
  for (auto _ : st) benchmark::DoNotOptimize(polarization_gram(*c, a));
}

void BM_PolarizationGramSerial(benchmark::State& st) {
  auto c = clifford(QuadraticForm::parse("diag:1,1,-1,-1,-1,-1,-1,-1"));
  auto a = pair_product(*c);
  for (auto _ : st) benchmark::DoNotOptimize(polarization_gram_serial(*c, a));
}

void BM_PwCheck(benchmark::State& st) {
  const auto& bm = model(3);
  auto t = find_lagrangian_triple(bm.q0);
  for (auto _ : st) benchmark::DoNotOptimize(pw_check(bm.ring, t, bm.q0).shift);
}

void BM_PwCheckSerial(benchmark::State& st) {
  const auto& bm = model(3);
  auto t = find_lagrangian_triple(bm.q0);
  for (auto _ : st) benchmark::DoNotOptimize(pw_check_serial(bm.ring, t, bm.q0).shift);
}

void BM_Associativity(benchmark::State& st) {
  const auto& r = model(3).ring;
  for (auto _ : st) benchmark::DoNotOptimize(associativity_defects(r, 1).size());
}

void BM_AssociativitySerial(benchmark::State& st) {
  const auto& r = model(3).ring;
  for (auto _ : st) benchmark::DoNotOptimize(associativity_defects_serial(r, 1).size());
}

}  // namespace

BENCHMARK(BM_LieClosure)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarizationGram)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarizationGramSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PwCheck)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PwCheckSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativitySerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
