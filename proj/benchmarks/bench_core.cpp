#include <benchmark/benchmark.h>

#include "oscsym/algebra.hpp"
#include "oscsym/catalog.hpp"
#include "oscsym/oscillator.hpp"
#include "oscsym/phasespace.hpp"
#include "oscsym/realizations.hpp"

using namespace oscsym;

static void BM_ExactCommutator(benchmark::State& state) {
    ExactMatrix k1 = sp4_generator(GeneratorName::K1, Ordering::Interleaved);
    ExactMatrix q1 = sp4_generator(GeneratorName::Q1, Ordering::Interleaved);
    for (auto _ : state) benchmark::DoNotOptimize(commutator(k1, q1));
}
BENCHMARK(BM_ExactCommutator);

static void BM_StructureConstants15(benchmark::State& state) {
    BasisSet basis = full_basis_4x4(Ordering::Interleaved);
    for (auto _ : state) benchmark::DoNotOptimize(structure_constants(basis));
}
BENCHMARK(BM_StructureConstants15);

static void BM_EnumerateSubgroups(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_sp4_subgroups());
}
BENCHMARK(BM_EnumerateSubgroups);

static void BM_ExpAndDefect(benchmark::State& state) {
    SymplecticForm J = j_matrix(Ordering::Interleaved);
    double theta = 0.1;
    for (auto _ : state) {
        GroupElement g = exp_generator(GeneratorName::K1, theta, Ordering::Interleaved);
        benchmark::DoNotOptimize(canonical_defect(g, J));
        theta += 1e-6;  // defeat any caching of the matrix exponential
    }
}
BENCHMARK(BM_ExpAndDefect);

static void BM_NormalFormRoundtrip(benchmark::State& state) {
    for (auto _ : state) {
        NormalForm nf = normal_form({1.0, 1.0, 2.0, 1.0});
        benchmark::DoNotOptimize(reconstruct(nf));
    }
}
BENCHMARK(BM_NormalFormRoundtrip);

static void BM_FockCommutatorCheck(benchmark::State& state) {
    FockTruncation t(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fock_commutator_check(GeneratorName::K1, GeneratorName::Q1, t));
}
BENCHMARK(BM_FockCommutatorCheck)->Arg(8)->Arg(12)->Arg(16);

static void BM_SymplecticEigenvalues(benchmark::State& state) {
    GaussianState s = coupled_ground_state(-0.25, 0.6);
    for (auto _ : state) benchmark::DoNotOptimize(symplectic_eigenvalues(s));
}
BENCHMARK(BM_SymplecticEigenvalues);

BENCHMARK_MAIN();
