#pragma once

#include "boxfactor/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace boxfactor {

/// Bijection between the vertices of a graph and the coordinate box
/// [sizes[0]] x ... x [sizes[k-1]].
///
/// Box positions are numbered row-major (last coordinate fastest); `lookup`
/// is indexed by box position.
class Coordinatization {
public:
    Coordinatization() = default;

    /// Returns nullopt if `coords` (n rows of k entries, flattened) is not a
    /// bijection onto the box.
    static std::optional<Coordinatization> from_coords(std::vector<std::size_t> sizes, std::vector<std::size_t> coords);

    /// The canonical row-major coordinatization of the box itself.
    static Coordinatization row_major(std::vector<std::size_t> sizes);

    std::size_t k() const noexcept { return sizes_.size(); }
    std::size_t n() const noexcept { return lookup_.size(); }
    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    const std::vector<std::size_t>& strides() const noexcept { return strides_; }

    std::span<const std::size_t> coords(Vertex v) const { return {coords_.data() + v * k(), k()}; }
    std::size_t box_index(std::span<const std::size_t> tuple) const;
    Vertex lookup(std::span<const std::size_t> tuple) const { return lookup_[box_index(tuple)]; }
    Vertex at_box_index(std::size_t index) const { return lookup_[index]; }

    /// Coordinates permuted so that new coordinate i is old coordinate order[i].
    Coordinatization permuted(std::span<const std::size_t> order) const;

    friend bool operator==(const Coordinatization&, const Coordinatization&) = default;

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> strides_;
    std::vector<std::size_t> coords_;
    std::vector<Vertex> lookup_;
};

struct Product {
    Graph graph;
    Coordinatization coord;
};

/// Cartesian product with loops: a product vertex is looped iff one of its
/// constituents is. Vertices are numbered row-major over the factor order.
/// Throws EmptyFactorList or EmptyFactor.
Product cartesian_product(std::span<const Graph> factors);

/// Throws IndexOutOfRange when i >= c.k().
std::size_t projection(const Coordinatization& c, Vertex v, std::size_t i);

struct Layer {
    Graph graph;
    /// vertex_map[x] is the vertex of G whose i-th coordinate is x.
    std::vector<Vertex> vertex_map;
};

/// Induced subgraph through `a` varying only coordinate i.
Layer layer_subgraph(const Graph& g, const Coordinatization& c, Vertex a, std::size_t i);

} // namespace boxfactor
