#pragma once

#include "boxfactor/graph.hpp"

#include <optional>
#include <vector>

namespace boxfactor {

struct IsomorphismOptions {
    /// Inputs above this vertex count are refused with SizeLimitExceeded.
    std::size_t max_vertices = 12;
};

/// Vertex bijection phi with phi[v] in H, preserving 2-edges and loop flags
/// in both directions, or nullopt. Backtracking over classes of a joint
/// colour refinement seeded by (loop flag, degree).
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h, IsomorphismOptions options = {});

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& phi);

/// Multiset equality up to isomorphism (greedy matching is exact because
/// isomorphism is an equivalence relation).
bool same_prime_multiset(const std::vector<Graph>& a, const std::vector<Graph>& b, IsomorphismOptions options = {});

} // namespace boxfactor
