#include "boxfactor/simple_factor.hpp"

#include "boxfactor/disjoint_sets.hpp"
#include "boxfactor/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace boxfactor {

EdgeIndex::EdgeIndex(const Graph& g) : graph_(&g), offsets_(g.n() + 1, 0) {
    for (Vertex v = 0; v < g.n(); ++v) {
        offsets_[v + 1] = offsets_[v] + g.degree(v);
    }
    slot_edge_.resize(offsets_.back());
    // Slots of v pointing at smaller ids are reached in ascending order.
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (Vertex u = 0; u < g.n(); ++u) {
        auto nbrs = g.neighbors(u);
        for (std::size_t pos = 0; pos < nbrs.size(); ++pos) {
            const Vertex v = nbrs[pos];
            if (u < v) {
                const auto e = static_cast<std::uint32_t>(ends_.size());
                ends_.emplace_back(u, v);
                slot_edge_[offsets_[u] + pos] = e;
                slot_edge_[cursor[v]++] = e;
            }
        }
    }
}

std::uint32_t EdgeIndex::id(Vertex u, Vertex v) const {
    auto nbrs = graph_->neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    return slot(u, static_cast<std::size_t>(it - nbrs.begin()));
}

namespace {

void require_simple_connected(const Graph& g) {
    if (g.loop_count() != 0) {
        throw Error(ErrorCode::HasLoops, std::to_string(g.loop_count()) + " loops");
    }
    if (g.n() < 2) {
        throw Error(ErrorCode::Trivial, "n=" + std::to_string(g.n()));
    }
    if (!is_connected(g)) {
        throw Error(ErrorCode::Disconnected, "");
    }
}

EdgeColoring coloring_from_sets(DisjointSets& sets) {
    EdgeColoring out;
    out.color.resize(sets.size());
    constexpr auto unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> label(sets.size(), unset);
    for (std::uint32_t e = 0; e < sets.size(); ++e) {
        const auto rep = sets.find(e);
        if (label[rep] == unset) {
            label[rep] = out.k++;
        }
        out.color[e] = label[rep];
    }
    return out;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
    return bfs_order(g, source).dist;
}

// Two differently coloured edges e = xy, f = uv with
// d(x,u) + d(y,v) != d(x,v) + d(y,u). Such edges always lie in the same
// prime factor, and a colouring closed under this relation and the
// no-square relation is the prime colouring.
MergeWitness distance_witness(const Graph& g, const EdgeIndex& index, const EdgeColoring& coloring, Vertex root) {
    const auto tree = bfs_order(g, root);
    std::vector<bool> is_tree_edge(index.edge_count(), false);
    std::vector<std::uint32_t> candidates;
    std::vector<bool> reached(g.n(), false);
    reached[root] = true;
    for (Vertex u : tree.order) {
        auto nbrs = g.neighbors(u);
        for (std::size_t pos = 0; pos < nbrs.size(); ++pos) {
            const Vertex w = nbrs[pos];
            if (!reached[w] && tree.dist[w] == tree.dist[u] + 1) {
                reached[w] = true;
                const auto e = index.slot(u, pos);
                is_tree_edge[e] = true;
                candidates.push_back(e);
            }
        }
    }
    for (std::uint32_t e = 0; e < index.edge_count(); ++e) {
        if (!is_tree_edge[e]) {
            candidates.push_back(e);
        }
    }
    for (auto e : candidates) {
        const auto [x, y] = index.ends(e);
        const auto dx = distances_from(g, x);
        const auto dy = distances_from(g, y);
        for (std::uint32_t f = 0; f < index.edge_count(); ++f) {
            if (coloring.color[f] == coloring.color[e]) {
                continue;
            }
            const auto [u, v] = index.ends(f);
            if (dx[u] + dy[v] != dx[v] + dy[u]) {
                const auto a = coloring.color[e];
                const auto b = coloring.color[f];
                return {std::min(a, b), std::max(a, b)};
            }
        }
    }
    throw std::logic_error("coordinatization failed on a colouring closed under the distance relation");
}

} // namespace

EdgeColoring square_relation_closure(const Graph& g) {
    require_simple_connected(g);
    const EdgeIndex index(g);
    DisjointSets sets(index.edge_count());

    constexpr auto none = ~std::uint32_t{0};
    std::vector<std::uint32_t> bucket_of(g.n(), none);
    std::vector<std::vector<std::uint32_t>> buckets;
    std::vector<Vertex> bucket_vertex;
    std::vector<std::uint32_t> pair_count;
    std::vector<Vertex> pair_corner;

    for (Vertex x = 0; x < g.n(); ++x) {
        auto nbrs = g.neighbors(x);
        const std::size_t d = nbrs.size();
        if (d < 2) {
            continue;
        }
        buckets.clear();
        bucket_vertex.clear();
        for (std::uint32_t i = 0; i < d; ++i) {
            for (Vertex w : g.neighbors(nbrs[i])) {
                if (w == x) {
                    continue;
                }
                if (bucket_of[w] == none) {
                    bucket_of[w] = static_cast<std::uint32_t>(buckets.size());
                    buckets.emplace_back();
                    bucket_vertex.push_back(w);
                }
                buckets[bucket_of[w]].push_back(i);
            }
        }
        pair_count.assign(d * d, 0);
        pair_corner.assign(d * d, 0);
        for (std::size_t b = 0; b < buckets.size(); ++b) {
            const auto& list = buckets[b];
            for (std::size_t p = 0; p < list.size(); ++p) {
                for (std::size_t q = p + 1; q < list.size(); ++q) {
                    const auto slot = list[p] * d + list[q];
                    ++pair_count[slot];
                    pair_corner[slot] = bucket_vertex[b];
                }
            }
        }
        for (Vertex w : bucket_vertex) {
            bucket_of[w] = none;
        }
        for (std::uint32_t i = 0; i < d; ++i) {
            const auto exi = index.slot(x, i);
            for (std::uint32_t j = i + 1; j < d; ++j) {
                const auto exj = index.slot(x, j);
                const auto count = pair_count[i * d + j];
                if (count != 1) {
                    sets.unite(exi, exj);
                    continue;
                }
                const Vertex y = nbrs[i];
                const Vertex z = nbrs[j];
                const Vertex w = pair_corner[i * d + j];
                if (g.has_edge(y, z) || g.has_edge(x, w)) {
                    // Their only common 4-cycle has a chord.
                    sets.unite(exi, exj);
                } else {
                    sets.unite(exi, index.id(w, z));
                    sets.unite(exj, index.id(w, y));
                }
            }
        }
    }
    return coloring_from_sets(sets);
}

std::variant<Coordinatization, MergeWitness> coordinatize_by_coloring(const Graph& g, const EdgeColoring& coloring,
                                                                      Vertex root) {
    const EdgeIndex index(g);
    const std::size_t n = g.n();
    const std::size_t k = coloring.k;
    auto fail = [&]() -> std::variant<Coordinatization, MergeWitness> {
        return distance_witness(g, index, coloring, root);
    };
    if (n == 1 && k == 0) {
        return *Coordinatization::from_coords({}, {});
    }

    // Unit layers through the root, each numbered in BFS order.
    std::vector<std::vector<Vertex>> unit(k);
    std::vector<std::uint32_t> visited_by(n, ~std::uint32_t{0});
    std::size_t volume = 1;
    for (std::uint32_t c = 0; c < k; ++c) {
        auto& layer = unit[c];
        layer.push_back(root);
        visited_by[root] = c;
        for (std::size_t head = 0; head < layer.size(); ++head) {
            const Vertex u = layer[head];
            auto nbrs = g.neighbors(u);
            for (std::size_t pos = 0; pos < nbrs.size(); ++pos) {
                const Vertex w = nbrs[pos];
                if (coloring.color[index.slot(u, pos)] == c && visited_by[w] != c) {
                    visited_by[w] = c;
                    layer.push_back(w);
                }
            }
        }
        if (layer.size() < 2 || volume * layer.size() > n) {
            return fail();
        }
        volume *= layer.size();
    }
    if (volume != n) {
        return fail();
    }

    // Coordinate c of v: the unit-layer vertex in v's component of G minus
    // the colour-c edges.
    std::vector<std::size_t> coords(n * k);
    std::vector<std::uint32_t> component(n);
    std::vector<Vertex> stack;
    for (std::uint32_t c = 0; c < k; ++c) {
        constexpr auto unassigned = ~std::uint32_t{0};
        std::fill(component.begin(), component.end(), unassigned);
        std::uint32_t components = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (component[s] != unassigned) {
                continue;
            }
            component[s] = components;
            stack.push_back(s);
            while (!stack.empty()) {
                const Vertex u = stack.back();
                stack.pop_back();
                auto nbrs = g.neighbors(u);
                for (std::size_t pos = 0; pos < nbrs.size(); ++pos) {
                    const Vertex w = nbrs[pos];
                    if (component[w] == unassigned && coloring.color[index.slot(u, pos)] != c) {
                        component[w] = components;
                        stack.push_back(w);
                    }
                }
            }
            ++components;
        }
        if (components != unit[c].size()) {
            return fail();
        }
        std::vector<std::size_t> value(components, ~std::size_t{0});
        for (std::size_t x = 0; x < unit[c].size(); ++x) {
            auto& slot = value[component[unit[c][x]]];
            if (slot != ~std::size_t{0}) {
                return fail();
            }
            slot = x;
        }
        for (Vertex v = 0; v < n; ++v) {
            coords[v * k + c] = value[component[v]];
        }
    }
    std::vector<std::size_t> sizes(k);
    for (std::size_t c = 0; c < k; ++c) {
        sizes[c] = unit[c].size();
    }
    auto coord = Coordinatization::from_coords(std::move(sizes), std::move(coords));
    if (!coord) {
        return fail();
    }

    // Every edge must be a product edge of its own colour; equal edge counts
    // then make the edge map onto.
    std::size_t product_edges = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const auto factor = induced_subgraph(g, unit[c]);
        for (auto [a, b] : factor.edges()) {
            if (coloring.color[index.id(unit[c][a], unit[c][b])] != c) {
                return fail();
            }
        }
        product_edges += factor.two_edge_count() * (n / unit[c].size());
    }
    if (product_edges != index.edge_count()) {
        return fail();
    }
    for (std::uint32_t e = 0; e < index.edge_count(); ++e) {
        const auto [u, v] = index.ends(e);
        const auto c = coloring.color[e];
        auto cu = coord->coords(u);
        auto cv = coord->coords(v);
        for (std::size_t i = 0; i < k; ++i) {
            if (i != c && cu[i] != cv[i]) {
                return fail();
            }
        }
        if (!g.has_edge(unit[c][cu[c]], unit[c][cv[c]])) {
            return fail();
        }
    }
    return std::move(*coord);
}

EdgeColoring merge_colors(const EdgeColoring& coloring, MergeWitness witness) {
    const auto keep = std::min(witness.first, witness.second);
    const auto drop = std::max(witness.first, witness.second);
    EdgeColoring out;
    out.k = keep == drop ? coloring.k : coloring.k - 1;
    out.color.reserve(coloring.color.size());
    for (auto c : coloring.color) {
        if (c == drop) {
            c = keep;
        } else if (c > drop) {
            --c;
        }
        out.color.push_back(c);
    }
    // Joining may change which class owns the smallest edge id; restore order.
    std::vector<std::uint32_t> label(out.k, ~std::uint32_t{0});
    std::uint32_t next = 0;
    for (auto& c : out.color) {
        if (label[c] == ~std::uint32_t{0}) {
            label[c] = next++;
        }
        c = label[c];
    }
    return out;
}

Factorization factor_simple(const Graph& g, Vertex root) {
    if (g.loop_count() != 0) {
        throw Error(ErrorCode::HasLoops, std::to_string(g.loop_count()) + " loops");
    }
    if (g.n() == 0) {
        throw Error(ErrorCode::Trivial, "empty graph");
    }
    if (root >= g.n()) {
        throw Error(ErrorCode::IdOutOfRange, "root " + std::to_string(root));
    }
    if (g.n() == 1) {
        return {{}, *Coordinatization::from_coords({}, {})};
    }
    auto coloring = square_relation_closure(g);
    while (true) {
        auto result = coordinatize_by_coloring(g, coloring, root);
        if (auto* witness = std::get_if<MergeWitness>(&result)) {
            coloring = merge_colors(coloring, *witness);
            continue;
        }
        auto& coord = std::get<Coordinatization>(result);
        std::vector<Graph> layers;
        layers.reserve(coord.k());
        for (std::size_t i = 0; i < coord.k(); ++i) {
            layers.push_back(layer_subgraph(g, coord, root, i).graph);
        }
        std::vector<std::size_t> order(coord.k());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::pair{layers[a].n(), layers[a].two_edge_count()} <
                   std::pair{layers[b].n(), layers[b].two_edge_count()};
        });
        Factorization out;
        for (auto i : order) {
            out.primes.push_back(std::move(layers[i]));
        }
        out.coord = coord.permuted(order);
        return out;
    }
}

} // namespace boxfactor
