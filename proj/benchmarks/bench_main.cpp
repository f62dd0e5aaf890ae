#include <benchmark/benchmark.h>

#include <nilbox/fractal.hpp>
#include <nilbox/unit_time.hpp>

#include <cmath>
#include <random>

using namespace nilbox;

namespace {

Series2<Rat> random_series(int order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    Series2<Rat> s(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) s.set(i, j, Rat(num(rng), 7));
    return s;
}

PlanarSystem node_example(int order) {
    PlanarSystem sys;
    sys.order = order;
    sys.xdot = Series2<Rat>::variable_y(order);
    sys.ydot = Series2<Rat>(order);
    sys.ydot.set(5, 0, Rat(-1));
    sys.ydot.set(2, 1, Rat(-4));
    return sys;
}

void BM_series_mul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    Series2<Rat> a = random_series(order, 1);
    Series2<Rat> b = random_series(order, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(order);
}
BENCHMARK(BM_series_mul)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_picard_unit_time(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    PlanarSystem sys = node_example(order);
    for (auto _ : state) benchmark::DoNotOptimize(picard_unit_time(sys, order));
}
BENCHMARK(BM_picard_unit_time)->DenseRange(6, 14, 2);

void BM_grid_boxcount(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Vec2> pts;
    double x = 0.5, y = 0.5;
    for (int k = 0; k < n; ++k) {
        pts.push_back({x, y});
        x -= std::pow(x, 3.0);
        y -= std::pow(y, 2.0);
        if (x < 1e-14 || y < 1e-14) break;
    }
    for (auto _ : state) benchmark::DoNotOptimize(grid_boxcount_dimension(pts));
    state.SetComplexityN(n);
}
BENCHMARK(BM_grid_boxcount)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_interval_union(benchmark::State& state) {
    std::vector<double> xs;
    double x = 0.5;
    while (x > 1e-14 && xs.size() < 100000) {
        xs.push_back(x);
        x -= std::pow(x, 2.5);
    }
    for (auto _ : state) benchmark::DoNotOptimize(interval_union_dimension(xs));
}
BENCHMARK(BM_interval_union);

}  // namespace

BENCHMARK_MAIN();
