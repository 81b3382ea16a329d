#include <benchmark/benchmark.h>

#include <random>

#include "aronsson/mollifier.hpp"
#include "aronsson/verify/jets.hpp"
#include "aronsson/verify/mollification.hpp"
#include "aronsson/verify/residuals.hpp"

using namespace aronsson;

namespace {

const Segment kHorizontal(Vector{-1.0, 0.0}, Vector{1.0, 0.0});

std::vector<double> phases(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> t(-3.0, 3.0);
    std::vector<double> out(n);
    for (auto& x : out) x = t(rng);
    return out;
}

void profile_derivative(benchmark::State& state, const ProfilePtr& f) {
    const auto ts = phases(1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f->derivative(ts[i++ & 1023]));
    }
}

} // namespace

static void BM_SawtoothDerivative(benchmark::State& state) { profile_derivative(state, make_sawtooth(0.5)); }
BENCHMARK(BM_SawtoothDerivative);

static void BM_WeierstrassDerivative(benchmark::State& state) {
    profile_derivative(state, make_weierstrass_primitive(0.5, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WeierstrassDerivative)->Arg(4)->Arg(16)->Arg(32);

static void BM_MollifiedDerivative(benchmark::State& state) {
    profile_derivative(state, mollify(make_sawtooth(0.5), Mollifier(0.1), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MollifiedDerivative)->Arg(256)->Arg(512)->Arg(1024);

static void BM_AnalyticSweep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Grid grid(Vector{0.0, 0.0}, {3.0, 3.0}, {n, n});
    const auto points = grid.points();
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_sum({make_seg_dist_sq(kHorizontal), make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0})});
    for (auto _ : state) {
        double worst = 0.0;
        for (const auto& x : points) {
            worst = std::max(worst, std::abs(*verify::aronsson_analytic(*H, sol, x).residual_analytic));
        }
        benchmark::DoNotOptimize(worst);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_AnalyticSweep)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_AronssonFd(benchmark::State& state) {
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_quadratic();
    const Vector x{0.785, 0.1};
    for (auto _ : state) benchmark::DoNotOptimize(verify::aronsson_fd(*H, sol, x, 1e-3));
}
BENCHMARK(BM_AronssonFd);

static void BM_JetCheck(benchmark::State& state) {
    const SingularSolution sol(kHorizontal, make_sawtooth(0.5));
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::viscosity_jet_check(*H, sol, Vector{1.0, 0.0}));
    }
}
BENCHMARK(BM_JetCheck)->Unit(benchmark::kMillisecond);

static void BM_MollificationSuite(benchmark::State& state) {
    const Grid grid(Vector{0.0, 0.0}, {3.0, 3.0}, {51, 51});
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    const std::vector<double> eps{0.2, 0.1, 0.05};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::mollification_suite(*H, kHorizontal, make_sawtooth(0.5), eps, grid, {}));
    }
}
BENCHMARK(BM_MollificationSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
