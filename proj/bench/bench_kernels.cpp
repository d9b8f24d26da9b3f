// Serial reference loops vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "seqeff/auditor.hpp"
#include "seqeff/commutant.hpp"
#include "seqeff/random.hpp"
#include "seqeff/seqprod.hpp"

using namespace seqeff;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_AuditSea1Complex4(benchmark::State& st) {
  AuditRow row = default_row(LawId::SEA1, SequentialProduct::standard(), AlgebraDescriptor::complex_hermitian(4), 1);
  for (auto _ : st) benchmark::DoNotOptimize(audit_law(row, mode(st)).max_residual);
}

void BM_AuditFundamentalQuat3(benchmark::State& st) {
  AuditRow row =
      default_row(LawId::FUNDAMENTAL_EQ, SequentialProduct::standard(), AlgebraDescriptor::quaternionic_hermitian(3), 1);
  row.trials = 20;
  for (auto _ : st) benchmark::DoNotOptimize(audit_law(row, mode(st)).max_residual);
}

void BM_MultiplicationOperatorTwisted(benchmark::State& st) {
  const auto alg = AlgebraDescriptor::complex_hermitian(4);
  const Element a = random_effect(alg, 1, EffectProfile::invertible);
  for (auto _ : st) {
    benchmark::DoNotOptimize(multiplication_operator(SequentialProduct::twisted(1.0), a, mode(st)).matrix().data());
  }
}

void BM_CommutantComplex4(benchmark::State& st) {
  const auto alg = AlgebraDescriptor::complex_hermitian(4);
  const Element a = random_effect(alg, 2, EffectProfile::generic);
  for (auto _ : st) benchmark::DoNotOptimize(commutant_basis({a}, mode(st)).size());
}

}  // namespace

BENCHMARK(BM_AuditSea1Complex4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditFundamentalQuat3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicationOperatorTwisted)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CommutantComplex4)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
