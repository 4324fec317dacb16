#include <benchmark/benchmark.h>

#include "paut/degeneration.hpp"
#include "paut/poly_kernels.hpp"

namespace {

using namespace paut;

// (1 + x1 + x2)^n with dense support.
ScalarPoly dense(Field k, unsigned n) {
  ScalarPoly s = ScalarPoly::variable(k, 2, 0) + ScalarPoly::variable(k, 2, 1) +
                 ScalarPoly::constant(2, Scalar::one(k));
  return s.pow(n);
}

Field field_of(int64_t code) { return code == 0 ? Field::rationals() : Field::prime(1000003); }

void BM_mul_serial(benchmark::State& state) {
  Field k = field_of(state.range(1));
  ScalarPoly a = dense(k, static_cast<unsigned>(state.range(0))), b = a;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_serial<Scalar>(a.terms(), b.terms()));
}

void BM_mul_parallel(benchmark::State& state) {
  Field k = field_of(state.range(1));
  ScalarPoly a = dense(k, static_cast<unsigned>(state.range(0))), b = a;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_parallel<Scalar>(a.terms(), b.terms()));
}

// Symbolic composition of a Hénon map with itself, n times.
void BM_henon_iterate(benchmark::State& state) {
  Field k = Field::prime(1000003);
  Endo f = parse_endo("(-x2, x1 + x2^2 + 3*x2)", k);
  for (auto _ : state) {
    Endo g = f;
    for (int64_t i = 1; i < state.range(0); ++i) g = compose(f, g);
    benchmark::DoNotOptimize(g);
  }
}

// Family (iv) witness in characteristic 5, dominated by Laurent composition.
void BM_degenerate_iv(benchmark::State& state) {
  Field k = Field::prime(5);
  UPoly Q = UPoly::monomial(Scalar::one(k), static_cast<int>(state.range(0))) + UPoly::constant(Scalar::one(k));
  for (auto _ : state) benchmark::DoNotOptimize(degenerate_family_iv(Q, Variant::F2));
}

}  // namespace

BENCHMARK(BM_mul_serial)->ArgsProduct({{10, 20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->ArgsProduct({{10, 20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_henon_iterate)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_degenerate_iv)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
