#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "lbi/lbi.hpp"

using namespace lbi;

namespace {

Distribution random_dist(std::mt19937& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> v(m);
    for (double& x : v) x = u(rng);
    return normalize(v);
}

void BM_BayesRoundTrip(benchmark::State& state) {
    const std::size_t m = state.range(0);
    std::mt19937 rng(1);
    const Distribution prior = random_dist(rng, m);
    const Distribution lik = random_dist(rng, m);
    for (auto _ : state) {
        const TruthFunction t = truth_from_likelihood(lik, prior);
        benchmark::DoNotOptimize(likelihood_from_truth(t, prior));
    }
}
BENCHMARK(BM_BayesRoundTrip)->Arg(64)->Arg(1024);

void BM_SemanticMutualInformation(benchmark::State& state) {
    const std::size_t m = state.range(0), n = 8;
    std::mt19937 rng(2);
    const JointDistribution joint(m, n, random_dist(rng, m * n).probs());
    const SemanticChannel sc = semantic_channel_from_joint(joint);
    for (auto _ : state)
        benchmark::DoNotOptimize(semantic_mutual_information(joint, sc));
}
BENCHMARK(BM_SemanticMutualInformation)->Arg(64)->Arg(512);

void BM_OptimizeTruthParams(benchmark::State& state) {
    const std::size_t m = state.range(0);
    const Alphabet grid = Alphabet::binned(0, 100, m);
    std::mt19937 rng(3);
    const Distribution sampling = random_dist(rng, m);
    const Distribution prior = Distribution::uniform(m);
    const GridSearchSpec spec = GridSearchSpec::for_grid(grid.values());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            optimize_truth_params(sampling, prior, grid.values(), spec));
}
BENCHMARK(BM_OptimizeTruthParams)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CmClassification(benchmark::State& state) {
    const std::size_t n_obs = state.range(0);
    std::mt19937 rng(4);
    const JointDistribution joint(4, n_obs, random_dist(rng, 4 * n_obs).probs());
    const Classifier f0 = quantile_partition(n_obs, 3);
    for (auto _ : state) benchmark::DoNotOptimize(cm_iterate(joint, f0, 3));
}
BENCHMARK(BM_CmClassification)->Arg(16)->Arg(128);

void BM_MixtureFit(benchmark::State& state) {
    const std::size_t m = 50;
    const Alphabet grid = Alphabet::binned(0, 50, m);
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = grid.value(i);
        v[i] = std::exp(-0.5 * (x - 20) * (x - 20) / 25.0) +
               std::exp(-0.5 * (x - 30) * (x - 30) / 25.0);
    }
    const Distribution data = normalize(v);
    const MixtureModel init = default_mixture_init(2, grid.values());
    const bool cm = state.range(0) == 1;
    for (auto _ : state) {
        if (cm)
            benchmark::DoNotOptimize(cm_fit(data, 2, init, grid.values()));
        else
            benchmark::DoNotOptimize(em_fit(data, 2, init));
    }
}
BENCHMARK(BM_MixtureFit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
