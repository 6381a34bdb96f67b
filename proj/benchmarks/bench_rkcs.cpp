#include <rkcs/rkcs.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <string>

namespace {

const rkcs::Instance& instance(const std::string& name) {
    static const rkcs::Instance eil = rkcs::load_instance(std::string(RKCS_DATA_DIR) + "/eil51.tsp");
    static const rkcs::Instance kro = rkcs::load_instance(std::string(RKCS_DATA_DIR) + "/kroA100.tsp");
    return name == "eil51" ? eil : kro;
}

std::vector<rkcs::City> shuffled(std::size_t m, rkcs::Rng& rng) {
    std::vector<rkcs::City> order(m);
    std::iota(order.begin(), order.end(), rkcs::City{0});
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

void BM_TourCost(benchmark::State& state) {
    const auto& inst = instance("kroA100");
    rkcs::Rng rng(1);
    const auto order = shuffled(inst.dimension(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rkcs::tour_cost(inst, order));
}
BENCHMARK(BM_TourCost);

void BM_SteepestDescent(benchmark::State& state) {
    const auto& inst = instance(state.range(0) == 51 ? "eil51" : "kroA100");
    rkcs::Rng rng(2);
    for (auto _ : state) {
        state.PauseTiming();
        rkcs::Tour start(inst, shuffled(inst.dimension(), rng));
        state.ResumeTiming();
        benchmark::DoNotOptimize(rkcs::steepest_descent(inst, start));
    }
}
BENCHMARK(BM_SteepestDescent)->Arg(51)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State& state) {
    rkcs::Rng rng(3);
    const auto kv = rkcs::random_key_vector(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(rkcs::decode(kv));
}
BENCHMARK(BM_Decode)->Arg(51)->Arg(200)->Arg(1000);

void BM_LevyStep(benchmark::State& state) {
    rkcs::Rng rng(4);
    const rkcs::LevyParams p;
    for (auto _ : state) benchmark::DoNotOptimize(rkcs::levy_step(p, rng));
}
BENCHMARK(BM_LevyStep);

void BM_SolverGeneration(benchmark::State& state) {
    const auto& inst = instance(state.range(0) == 51 ? "eil51" : "kroA100");
    rkcs::Solver solver(inst, rkcs::SolverParams{});
    for (auto _ : state) benchmark::DoNotOptimize(solver.step());
}
BENCHMARK(BM_SolverGeneration)->Arg(51)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
