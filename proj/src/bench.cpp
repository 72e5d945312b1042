#include "boxfactor/bench.hpp"

#include "boxfactor/loop_factor.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>

namespace boxfactor {

namespace {

template <typename Fn>
double best_batch_mean_ms(const BenchOptions& options, Fn&& work) {
    using clock = std::chrono::steady_clock;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < options.batches; ++b) {
        std::size_t reps = 0;
        const auto start = clock::now();
        double elapsed = 0.0;
        do {
            work();
            ++reps;
            elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        } while (elapsed < options.min_batch_ms);
        best = std::min(best, elapsed / static_cast<double>(reps));
    }
    return best;
}

// Keeps results observable so the timed work is not optimised away.
volatile std::size_t sink = 0;

} // namespace

Graph hypercube_with_loops(std::size_t d, double loop_probability, std::uint64_t seed) {
    const auto cube = hypercube_graph(d);
    std::mt19937_64 rng(seed);
    std::vector<bool> flags(cube.n());
    bool any_unlooped = false;
    for (std::size_t v = 0; v < cube.n(); ++v) {
        flags[v] = static_cast<double>(rng() >> 11) * 0x1.0p-53 < loop_probability;
        any_unlooped = any_unlooped || !flags[v];
    }
    if (!any_unlooped) {
        flags[rng() % cube.n()] = false;
    }
    return Graph(cube.adjacency(), std::move(flags));
}

std::vector<BenchRow> bench_hypercube_loops(std::size_t d_from, std::size_t d_to, const BenchOptions& options) {
    std::vector<BenchRow> rows;
    for (std::size_t d = d_from; d <= d_to; ++d) {
        const auto g = hypercube_with_loops(d, options.loop_probability, options.seed + d);
        const auto skeleton_graph = strip_loops(g);
        const Vertex root = lowest_unlooped_vertex(g);
        const auto skeleton = factor_simple(skeleton_graph, root);

        const double simple_ms = best_batch_mean_ms(options, [&] {
            sink = sink + factor_simple(skeleton_graph, root).primes.size();
        });
        const double merge_ms = best_batch_mean_ms(options, [&] {
            sink = sink + loop_merge_stage(g, skeleton, root).primes.size();
        });
        const double pipeline_ms = best_batch_mean_ms(options, [&] {
            sink = sink + factor_loops_linear(g).primes.size();
        });
        rows.push_back({g.n(), g.two_edge_count(), "factor_simple", simple_ms});
        rows.push_back({g.n(), g.two_edge_count(), "loop_merge", merge_ms});
        rows.push_back({g.n(), g.two_edge_count(), "pipeline", pipeline_ms});
    }
    return rows;
}

} // namespace boxfactor
