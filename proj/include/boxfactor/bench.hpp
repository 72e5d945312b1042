#pragma once

#include "boxfactor/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace boxfactor {

struct BenchRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::string stage;
    double milliseconds = 0.0;
};

/// Q_d with each vertex looped independently; if every vertex ends up looped
/// one random loop is cleared.
Graph hypercube_with_loops(std::size_t d, double loop_probability, std::uint64_t seed);

struct BenchOptions {
    double loop_probability = 0.3;
    std::uint64_t seed = 7;
    /// Each timing is the best of `batches` batch means; a batch repeats the
    /// work until it has run for at least `min_batch_ms`.
    std::size_t batches = 5;
    double min_batch_ms = 20.0;
};

/// Rows for stages "factor_simple", "loop_merge" and "pipeline", one triple
/// per dimension in [d_from, d_to].
std::vector<BenchRow> bench_hypercube_loops(std::size_t d_from, std::size_t d_to, const BenchOptions& options = {});

} // namespace boxfactor
