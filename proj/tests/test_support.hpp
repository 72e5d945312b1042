#pragma once

#include "boxfactor/graph.hpp"
#include "boxfactor/oracle.hpp"

#include <cstdint>
#include <vector>

namespace boxfactor::test {

// Product by direct enumeration of vertex pairs: adjacent iff exactly one
// coordinate differs and that pair is an edge of its factor; looped iff some
// coordinate is looped. Vertices are numbered row-major.
inline Graph definition_product(const std::vector<Graph>& factors) {
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f.n();
    }
    auto tuple_of = [&](std::size_t v) {
        std::vector<Vertex> t(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            t[i] = static_cast<Vertex>(v % factors[i].n());
            v /= factors[i].n();
        }
        return t;
    };
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (std::size_t v = 0; v < n; ++v) {
        const auto a = tuple_of(v);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].is_looped(a[i])) {
                loops.push_back(static_cast<Vertex>(v));
                break;
            }
        }
        for (std::size_t w = v + 1; w < n; ++w) {
            const auto b = tuple_of(w);
            std::size_t differing = 0;
            std::size_t where = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (a[i] != b[i]) {
                    ++differing;
                    where = i;
                }
            }
            if (differing == 1 && factors[where].has_edge(a[where], b[where])) {
                edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
            }
        }
    }
    return make_graph(n, edges, loops);
}

inline Graph k2_looped_at(Vertex v) {
    const std::vector<Edge> e{{0, 1}};
    const std::vector<Vertex> l{v};
    return make_graph(2, e, l);
}

inline Graph looped(const Graph& g, std::vector<Vertex> loops) {
    return make_graph(g.n(), g.edges(), loops);
}

} // namespace boxfactor::test
