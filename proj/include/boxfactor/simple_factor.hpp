#pragma once

#include "boxfactor/graph.hpp"
#include "boxfactor/product.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace boxfactor {

/// Prime factors plus the coordinatization of the factored graph relative
/// to them (coordinate i indexes the vertices of primes[i]).
struct Factorization {
    std::vector<Graph> primes;
    Coordinatization coord;
};

/// Maps every adjacency slot of a graph to the id of its 2-edge; ids follow
/// the order of Graph::edges().
class EdgeIndex {
public:
    explicit EdgeIndex(const Graph& g);

    std::size_t edge_count() const noexcept { return ends_.size(); }
    std::uint32_t slot(Vertex v, std::size_t position) const { return slot_edge_[offsets_[v] + position]; }
    /// Requires (u, v) to be an edge.
    std::uint32_t id(Vertex u, Vertex v) const;
    Edge ends(std::uint32_t e) const { return ends_[e]; }

private:
    const Graph* graph_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> slot_edge_;
    std::vector<Edge> ends_;
};

struct EdgeColoring {
    /// color[e] for each edge id e of EdgeIndex / Graph::edges().
    std::vector<std::uint32_t> color;
    std::uint32_t k = 0;
};

/// Two colour classes that any product colouring must keep together.
struct MergeWitness {
    std::uint32_t first = 0;
    std::uint32_t second = 0;
};

/// Transitive closure of the square relation on 2-edges: opposite edges of a
/// chordless 4-cycle, adjacent edges sharing no chordless 4-cycle, and
/// adjacent edges sharing two or more 4-cycles are identified. Classes are
/// numbered in order of their smallest edge id.
/// Throws HasLoops, Trivial (n < 2) or Disconnected.
EdgeColoring square_relation_closure(const Graph& g);

/// Coordinate c of the result corresponds to colour c; the root maps to the
/// origin and the unit layer of colour c is numbered in BFS order.
std::variant<Coordinatization, MergeWitness> coordinatize_by_coloring(const Graph& g, const EdgeColoring& coloring,
                                                                      Vertex root);

/// Colouring with classes `first` and `second` joined, renumbered so colours
/// stay ordered by their smallest edge id.
EdgeColoring merge_colors(const EdgeColoring& coloring, MergeWitness witness);

/// Prime factorization of a connected loop-free graph. Factors are the layers
/// through `root`, ordered by (vertex count, 2-edge count, colour index).
/// K1 yields an empty factorization. Throws HasLoops, Trivial (n = 0),
/// Disconnected or IdOutOfRange.
Factorization factor_simple(const Graph& g, Vertex root = 0);

} // namespace boxfactor
