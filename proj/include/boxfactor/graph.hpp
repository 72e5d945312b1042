#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace boxfactor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite undirected graph with optional loops.
///
/// 2-edges are stored as sorted, symmetric adjacency lists; a loop is a
/// per-vertex flag and never appears in the adjacency lists. Instances are
/// immutable once built.
class Graph {
public:
    Graph() = default;

    /// Trusted constructor: lists must already be sorted, symmetric and
    /// free of self entries. Use make_graph() for validated construction.
    Graph(std::vector<std::vector<Vertex>> adjacency, std::vector<bool> looped);

    std::size_t n() const noexcept { return adj_.size(); }
    std::size_t two_edge_count() const noexcept { return m2_; }
    std::size_t loop_count() const noexcept { return loops_; }
    std::size_t unlooped_count() const noexcept { return n() - loops_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool is_looped(Vertex v) const { return looped_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Minimum 2-edge degree; 0 for the empty graph.
    std::size_t min_degree() const noexcept;

    /// Canonical edge list, each pair (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::vector<Vertex> loops() const;

    const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adj_; }
    const std::vector<bool>& loop_flags() const noexcept { return looped_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<bool> looped_;
    std::size_t m2_ = 0;
    std::size_t loops_ = 0;
};

/// Validated construction. Throws Error with IdOutOfRange, SelfPairInTwoEdges
/// or DuplicateEdge. Repeated ids in `loops` are rejected as DuplicateEdge.
Graph make_graph(std::size_t n, std::span<const Edge> two_edges, std::span<const Vertex> loops = {});

Graph strip_loops(const Graph& g);
bool is_entirely_looped(const Graph& g);

/// Loops do not influence connectivity. The empty graph counts as disconnected.
bool is_connected(const Graph& g);

/// H's vertex ids are shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph (2-edges and loops) on `vertices`; vertex i of the
/// result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

struct BfsOrder {
    Vertex root = 0;
    std::vector<Vertex> order;
    std::vector<std::size_t> dist;
    std::vector<std::vector<Vertex>> levels;
};

/// Breadth-first order over 2-edges; neighbors are visited in ascending id.
/// Throws Disconnected if some vertex is unreachable, IdOutOfRange for a bad root.
BfsOrder bfs_order(const Graph& g, Vertex root);

// Small named graphs used throughout tests and tools.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen_graph();
Graph hypercube_graph(std::size_t d);

} // namespace boxfactor
