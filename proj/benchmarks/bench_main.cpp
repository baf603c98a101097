// Microbenchmarks for the dominant exact-arithmetic kernels: symbolic
// Pfaffians, characteristic polynomials, symbolic case-C determinants,
// Jordanization, and the Frobenius decision procedure.

#include <benchmark/benchmark.h>

#include "frob/catalog.hpp"
#include "frob/classify.hpp"
#include "frob/lie.hpp"
#include "frob/linalg.hpp"
#include "frob/polynomial.hpp"

using namespace frob;

namespace {

void bm_pfaffian_d0(benchmark::State& state) {
    const long n = state.range(0);
    LieAlgebra g = *Catalog::build("D0", {{"n", n}}).algebra;
    for (auto _ : state) {
        PfaffianPoly pf = pfaffian_of_dalpha(g);
        benchmark::DoNotOptimize(pf);
    }
}
BENCHMARK(bm_pfaffian_d0)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_frobenius_decide_d01(benchmark::State& state) {
    const long n = state.range(0);
    LieAlgebra g = *Catalog::build("D01", {{"n", n}}).algebra;
    for (auto _ : state) {
        FrobeniusResult fr = frobenius_decide(g);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(bm_frobenius_decide_d01)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_char_poly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational((i * 7 + j * 3) % 11 - 5);
    for (auto _ : state) {
        PolyQ p = char_poly(m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_char_poly)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void bm_casec_det_symbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiPoly d = casec_detp_symbolic(n, Rational(1), Rational(0));
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bm_casec_det_symbolic)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_jordanize_quadratic(benchmark::State& state) {
    // Distinct quadratic-extension eigenvalues: chi = (X^2 - 2)(X^2 - 8)...
    const int pairs = static_cast<int>(state.range(0));
    PolyQ chi = PolyQ::constant(Rational(1));
    for (int k = 1; k <= pairs; ++k)
        chi = chi * PolyQ({Rational(-2 * k * k), Rational(0), Rational(1)});
    MatQ m = krylov_companion(chi);
    for (auto _ : state) {
        JordanResult jr = jordanize(m);
        benchmark::DoNotOptimize(jr);
    }
}
BENCHMARK(bm_jordanize_quadratic)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void bm_derivation_algebra(benchmark::State& state) {
    const long n = state.range(0);
    LieAlgebra g = *Catalog::build("D0", {{"n", n}}).algebra;
    for (auto _ : state) {
        auto der = derivation_algebra(g);
        benchmark::DoNotOptimize(der);
    }
}
BENCHMARK(bm_derivation_algebra)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
