#pragma once

#include "boxfactor/disjoint_sets.hpp"
#include "boxfactor/graph.hpp"
#include "boxfactor/simple_factor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace boxfactor {

/// Coordinates of G with respect to the prime factors Z_0..Z_{r-1} of its
/// loop-free skeleton, translated so that `root` sits at the origin.
struct RelativeCoordinates {
    Vertex root = 0;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> strides;
    std::vector<std::size_t> coords;
    /// Base indices with a non-origin coordinate, ascending (CSR layout).
    std::vector<std::size_t> support_offsets;
    std::vector<std::uint32_t> support_indices;
    /// Row-major box position -> vertex.
    std::vector<Vertex> lookup;

    std::size_t r() const noexcept { return sizes.size(); }
    std::size_t n() const noexcept { return lookup.size(); }
    std::span<const std::size_t> coord(Vertex v) const { return {coords.data() + v * r(), r()}; }
    std::span<const std::uint32_t> support(Vertex v) const {
        return {support_indices.data() + support_offsets[v], support_offsets[v + 1] - support_offsets[v]};
    }
};

/// Factors strip_loops(g) and translates. Throws RootLooped, Disconnected,
/// Trivial (n < 2) or IdOutOfRange.
RelativeCoordinates relative_coordinates(const Graph& g, Vertex root);

/// Same, reusing an existing factorization of strip_loops(g).
RelativeCoordinates relative_coordinates(const Graph& g, const Factorization& skeleton, Vertex root);

/// Coarsenable partition of the base index set J = {0..r-1}.
class FactorPartition {
public:
    explicit FactorPartition(std::size_t base_count) : sets_(base_count) {}

    std::size_t base_count() const noexcept { return sets_.size(); }
    std::size_t part_count() const noexcept { return sets_.set_count(); }

    /// Canonical id of the part holding base index j.
    std::uint32_t part_of(std::uint32_t j) const { return sets_.find(j); }
    bool merge(std::uint32_t a, std::uint32_t b) { return sets_.unite(a, b); }

    /// Parts as ascending index lists, ordered by smallest member.
    std::vector<std::vector<std::uint32_t>> parts() const;

private:
    DisjointSets sets_;
};

enum class Condition {
    Ok,
    UnloopedButProjectionLooped,
    LoopedButNoProjectionLooped,
};

struct ConditionCheck {
    Condition kind = Condition::Ok;
    /// Parts whose projection was examined, i.e. parts meeting support(v).
    std::size_t inspected_parts = 0;
};

/// Vertex agreeing with v on the base indices of the part containing
/// `part_member` and with the root elsewhere.
Vertex project_to_part(const RelativeCoordinates& rc, const FactorPartition& partition, Vertex v,
                       std::uint32_t part_member);

ConditionCheck check_conditions(const RelativeCoordinates& rc, const FactorPartition& partition, Vertex v,
                                const Graph& g);

/// Joins every part meeting support(v). Throws NothingToMerge when at most one
/// part meets it.
FactorPartition merge_nonroot_parts(const RelativeCoordinates& rc, FactorPartition partition, Vertex v);

/// One factor per part: the layer of G through the root spanned by the part's
/// base coordinates, ordered by (vertex count, 2-edge count, loop count,
/// smallest base index).
Factorization assemble_factors(const Graph& g, const RelativeCoordinates& rc, const FactorPartition& partition);

struct ScanStats {
    std::size_t base_factors = 0;
    std::size_t inspections = 0;
    std::size_t merges = 0;
    /// Part count after each merge.
    std::vector<std::size_t> part_trace;
};

/// Lowest-id unlooped vertex. Throws NoUnloopedVertex.
Vertex lowest_unlooped_vertex(const Graph& g);

/// BFS-order partition coarsening. Throws Trivial (n = 0), NoUnloopedVertex
/// or Disconnected; K1 gives the empty factorization.
Factorization factor_loops_linear(const Graph& g, ScanStats* stats = nullptr);

/// The coarsening stage alone, given a factorization of the skeleton.
Factorization loop_merge_stage(const Graph& g, const Factorization& skeleton, Vertex root, ScanStats* stats = nullptr);

/// Subset scan over J in order of increasing size. Same preconditions and
/// errors as factor_loops_linear.
Factorization factor_loops_subset_scan(const Graph& g, ScanStats* stats = nullptr);

/// True iff the product of f.primes, mapped through f.coord, is exactly g.
bool verify_factorization(const Graph& g, const Factorization& f);

} // namespace boxfactor
