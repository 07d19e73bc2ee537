#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cayley/frames.hpp"
#include "cayley/group.hpp"
#include "cayley/gsp.hpp"
#include "cayley/irreps.hpp"
#include "cayley/linalg.hpp"
#include "cayley/spectral.hpp"

using namespace cayley;

namespace {

// splitmix64, enough to fill matrices reproducibly
double unit_double(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

CMat random_hermitian(int n, std::uint64_t seed) {
    std::uint64_t s = seed;
    CMat m(n, n);
    for (int r = 0; r < n; ++r) {
        m(r, r) = 2 * unit_double(s) - 1;
        for (int c = r + 1; c < n; ++c) {
            const cplx z(2 * unit_double(s) - 1, 2 * unit_double(s) - 1);
            m(r, c) = z;
            m(c, r) = std::conj(z);
        }
    }
    return m;
}

}  // namespace

static void BM_HermitianEig(benchmark::State& state) {
    const CMat m = random_hermitian(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        HermitianEigen eig = hermitian_eig(m);
        benchmark::DoNotOptimize(eig.values.data());
    }
}
BENCHMARK(BM_HermitianEig)->Arg(6)->Arg(12)->Arg(24)->Arg(48)
    ->Unit(benchmark::kMicrosecond);

static void BM_FourierMatrix_S4(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(4);
    const IrrepSet set = builtin_irreps_for(g);
    for (auto _ : state) {
        FourierMatrixB b = fourier_matrix(g, set);
        benchmark::DoNotOptimize(b.matrix);
    }
}
BENCHMARK(BM_FourierMatrix_S4)->Unit(benchmark::kMicrosecond);

static void BM_BlockDiagonalize_S4(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(4);
    const IrrepSet set = builtin_irreps_for(g);
    const WeightFunction w = weight_from_generating_set(g, {"(12)", "(23)", "(34)"});
    const CMat a = adjacency(g, w).matrix;
    const FourierMatrixB b = fourier_matrix(g, set);
    for (auto _ : state) {
        auto blocks = block_diagonalize(a, b);
        benchmark::DoNotOptimize(blocks.data());
    }
}
BENCHMARK(BM_BlockDiagonalize_S4)->Unit(benchmark::kMicrosecond);

static void BM_PreferredEigenbasis_S4(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(4);
    const IrrepSet set = builtin_irreps_for(g);
    const WeightFunction w = weight_from_generating_set(g, {"(12)", "(23)", "(34)"});
    for (auto _ : state) {
        PreferredEigenbasis basis = preferred_eigenbasis(g, set, w);
        benchmark::DoNotOptimize(basis.vectors);
    }
}
BENCHMARK(BM_PreferredEigenbasis_S4)->Unit(benchmark::kMicrosecond);

static void BM_BuildFrame_S4_Mixed(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(4);
    const IrrepSet set = builtin_irreps_for(g);
    const WeightFunction w =
        weight_from_generating_set(g, {"(12)", "(23)", "(34)", "(12)(34)"});
    const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    std::vector<SubspaceFrameSpec> specs = {
        {"iota", 1, 4.0, GenOrthonormal{}},
        {"tau", 1, -2.0, GenOrthonormal{}},
    };
    for (int i = 1; i <= 2; ++i) {
        specs.push_back({"sigma", i, 1 + r3, GenOrthonormal{}});
        specs.push_back({"sigma", i, 1 - r3, GenOrthonormal{}});
    }
    for (int i = 1; i <= 3; ++i) {
        specs.push_back({"pi", i, 0.0, GenOrthonormal{}});
        specs.push_back({"pi", i, -2.0, GenMercedes{}});
        specs.push_back({"pi_prime", i, 1 + r5, GenOrthonormal{}});
        specs.push_back({"pi_prime", i, 0.0, GenOrthonormal{}});
        specs.push_back({"pi_prime", i, 1 - r5, GenOrthonormal{}});
    }
    for (auto _ : state) {
        auto result = build_cayley_frame(g, set, w, specs);
        benchmark::DoNotOptimize(result.frame.atoms.data());
    }
}
BENCHMARK(BM_BuildFrame_S4_Mixed)->Unit(benchmark::kMicrosecond);

static void BM_RipBruteForce_S3(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(3);
    const IrrepSet set = builtin_irreps_for(g);
    const WeightFunction w = weight_from_generating_set(g, {"(12)", "(23)"});
    const PreferredEigenbasis basis = preferred_eigenbasis(g, set, w);
    std::vector<SubspaceFrameSpec> specs = {
        {"iota", 1, 2.0, GenOrthonormal{}},  {"tau", 1, -2.0, GenOrthonormal{}},
        {"pi", 1, 1.0, GenMercedes{}},       {"pi", 1, -1.0, GenMercedes{}},
        {"pi", 2, 1.0, GenMercedes{}},       {"pi", 2, -1.0, GenMercedes{}},
    };
    const auto result = build_cayley_frame(g, set, w, specs);
    const SparsityBasis sb = SparsityBasis::from(basis);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RipResult rip = rip_constant(result.frame, sb, k);
        benchmark::DoNotOptimize(rip.delta);
    }
}
BENCHMARK(BM_RipBruteForce_S3)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_GftRoundTrip_S4(benchmark::State& state) {
    const FiniteGroup g = build_symmetric(4);
    const IrrepSet set = builtin_irreps_for(g);
    const WeightFunction w = weight_from_generating_set(g, {"(12)", "(23)", "(34)"});
    const PreferredEigenbasis basis = preferred_eigenbasis(g, set, w);
    std::uint64_t s = 7;
    GraphSignal f;
    f.values.resize(g.order);
    for (auto& z : f.values) z = cplx(2 * unit_double(s) - 1, 2 * unit_double(s) - 1);
    for (auto _ : state) {
        GraphSignal back = igft(gft(f, basis), basis);
        benchmark::DoNotOptimize(back.values.data());
    }
}
BENCHMARK(BM_GftRoundTrip_S4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
