#include <benchmark/benchmark.h>

#include <vector>

#include "partspace/assignment.hpp"
#include "partspace/consensus.hpp"
#include "partspace/criteria.hpp"
#include "partspace/metrics.hpp"
#include "partspace/rng.hpp"
#include "partspace/sampling.hpp"

using namespace partspace;

namespace {

Partition random_soft(Rng& rng, std::size_t m, std::size_t l) {
    std::vector<double> entries(l * m);
    const std::vector<double> alpha(l, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::vector<double> column = rng.dirichlet(alpha);
        for (std::size_t k = 0; k < l; ++k) entries[k * m + j] = column[k];
    }
    return Partition(PartitionMatrix::unchecked(l, m, std::move(entries)));
}

Partition grid_base(std::size_t m, std::size_t l) {
    std::vector<int> labels(m);
    for (std::size_t j = 0; j < m; ++j) labels[j] = static_cast<int>(j % l);
    return partition_from_labels(labels, l);
}

void bm_solve_assignment(benchmark::State& state) {
    const std::size_t l = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    std::vector<double> entries(l * l);
    for (double& v : entries) v = rng.uniform(0.0, 1.0);
    const CostMatrix cost(l, entries);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_assignment(cost).objective);
    }
}
BENCHMARK(bm_solve_assignment)->Arg(4)->Arg(16)->Arg(64);

void bm_delta2(benchmark::State& state) {
    const std::size_t l = static_cast<std::size_t>(state.range(0));
    const std::size_t m = static_cast<std::size_t>(state.range(1));
    Rng rng(2);
    const Partition x = random_soft(rng, m, l);
    const Partition y = random_soft(rng, m, l);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_p(x, y, MetricSpec(2.0)));
    }
}
BENCHMARK(bm_delta2)->Args({3, 50})->Args({8, 200})->Args({16, 1000});

void bm_confusion(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const ChiMode mode = state.range(1) == 0 ? ChiMode::materialize : ChiMode::stream;
    Rng rng(3);
    const Partition x = random_soft(rng, m, 4);
    const Partition y = random_soft(rng, m, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(confusion(x, y, mode).m11);
    }
}
BENCHMARK(bm_confusion)->Args({64, 0})->Args({64, 1})->Args({512, 0})->Args({512, 1});

void bm_mean_partition_l2(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    DistributionSpec dist(DistributionModel::label_noise, grid_base(20, 3), 4);
    dist.epsilon = 0.2;
    const Sample s = sample(dist, n);
    for (auto _ : state) {
        MeanOptions opts;
        opts.seed = 5;
        benchmark::DoNotOptimize(mean_partition_l2(s, opts).variation);
    }
}
BENCHMARK(bm_mean_partition_l2)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
