#include <benchmark/benchmark.h>

#include "gaussint/basis.hpp"
#include "gaussint/boys.hpp"
#include "gaussint/eri.hpp"
#include "gaussint/one_electron.hpp"
#include "gaussint/rys.hpp"

namespace {

using namespace gaussint;

constexpr const char* kSto3gHO = R"(H 0
S 3 1.00
      3.42525091    0.15432897
      0.62391373    0.53532814
      0.16885540    0.44463454
****
O 0
S 3 1.00
    130.70932000    0.15432897
     23.80886100    0.53532814
      6.44360830    0.44463454
SP 3 1.00
      5.03315130   -0.09996723    0.15591627
      1.16959610    0.39951283    0.60768372
      0.38038900    0.70011547    0.39195739
****
)";

Molecule water() {
    return Molecule({{"O", 8, {0.0, 0.0, 0.2217}},
                     {"H", 1, {0.0, 1.4309, -0.8867}},
                     {"H", 1, {0.0, -1.4309, -0.8867}}});
}

void BM_Boys(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(boys(m, t));
        t += 0.37;
        if (t > 55.0) t = 0.1;
    }
}
BENCHMARK(BM_Boys)->Arg(4)->Arg(16);

void BM_RysRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rys_rule(n, 7.3));
}
BENCHMARK(BM_RysRule)->Arg(2)->Arg(5);

// Contracted (dp|pd) class over three-primitive contractions: the transfer
// pipeline hoists the geometry-only work out of the contraction loops.
struct QuartetFixture {
    QuartetFixture()
        : lib(load_basis(kSto3gHO)),
          a(Vec3{0, 0, 0}, 2, lib.shells("O")[1].primitives),
          b(Vec3{0, 0, 1.5}, 1, lib.shells("O")[2].primitives),
          c(Vec3{0, 1.2, 0}, 1, lib.shells("O")[2].primitives),
          d(Vec3{1.1, 0, 0.4}, 2, lib.shells("O")[1].primitives) {}
    BasisSetLibrary lib;
    ContractedShell a, b, c, d;
};

void BM_EriClassContracted(benchmark::State& state) {
    static const QuartetFixture fx;
    const auto backend = state.range(0) == 0 ? EriBackend::os : EriBackend::hgp;
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_class_contracted(fx.a, fx.b, fx.c, fx.d, backend));
}
BENCHMARK(BM_EriClassContracted)->Arg(0)->Name("BM_EriClassContracted/os");
BENCHMARK(BM_EriClassContracted)->Arg(1)->Name("BM_EriClassContracted/hgp");

void BM_OneElectronMatrices(benchmark::State& state) {
    const auto lib = load_basis(kSto3gHO);
    const auto mol = water();
    const auto basis = build_basis(mol, lib);
    for (auto _ : state) benchmark::DoNotOptimize(build_matrices(basis, mol));
}
BENCHMARK(BM_OneElectronMatrices);

void BM_WaterEriTensor(benchmark::State& state) {
    const auto lib = load_basis(kSto3gHO);
    const auto mol = water();
    const auto basis = build_basis(mol, lib);
    const auto backend = state.range(0) == 0 ? EriBackend::os : EriBackend::hgp;
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_all(basis, backend, 1e-14, 1));
}
BENCHMARK(BM_WaterEriTensor)->Arg(0)->Name("BM_WaterEriTensor/os");
BENCHMARK(BM_WaterEriTensor)->Arg(1)->Name("BM_WaterEriTensor/hgp");

}  // namespace

BENCHMARK_MAIN();
