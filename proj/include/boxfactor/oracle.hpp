#pragma once

#include "boxfactor/graph.hpp"
#include "boxfactor/product.hpp"
#include "boxfactor/simple_factor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace boxfactor {

struct TwoSplit {
    Graph first;
    Graph second;
    /// Two coordinates: position in `first`, position in `second`.
    Coordinatization coord;
};

/// Exhaustive search for G = H x L with both factors nontrivial. Vertex 0 is
/// pinned to (0, 0). Throws SizeLimitExceeded above `max_vertices`.
std::optional<TwoSplit> brute_force_two_split(const Graph& g, std::size_t max_vertices = 10);

/// Recursive two-splits until every part is prime. Throws Trivial (n = 0),
/// NoUnloopedVertex, Disconnected or SizeLimitExceeded.
Factorization brute_force_factor(const Graph& g, std::size_t max_vertices = 10);

struct InstanceSpec {
    std::size_t factors = 2;
    std::size_t min_size = 2;
    std::size_t max_size = 4;
    double loop_probability = 0.3;
    std::uint64_t seed = 1;
    /// Chance of each non-tree pair becoming an edge.
    double edge_probability = 0.3;
    /// Randomly renumber the product's vertices.
    bool shuffle_vertices = true;
};

struct RandomInstance {
    Graph product;
    std::vector<Graph> generators;
    Coordinatization coord;
};

/// Random connected generators, each with at least one unlooped vertex, and
/// their product. Deterministic for a given spec.
RandomInstance random_instance(const InstanceSpec& spec);

/// Random connected graph: a random tree plus independent extra edges, loops
/// with the given probability.
Graph random_connected_graph(std::size_t n, double edge_probability, double loop_probability, std::uint64_t seed);

/// Every connected loop-free graph on vertices 0..n-1 (n <= 6).
std::vector<Graph> labeled_connected_graphs(std::size_t n);

/// One representative per isomorphism class of connected loop-free graphs
/// on n <= 6 vertices.
std::vector<Graph> unlabeled_connected_graphs(std::size_t n);

/// `skeleton` with loops exactly on the set bits of `mask`.
Graph with_loop_mask(const Graph& skeleton, std::uint64_t mask);

} // namespace boxfactor
