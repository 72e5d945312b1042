#include "boxfactor/graph.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <string>

namespace boxfactor {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency, std::vector<bool> looped)
    : adj_(std::move(adjacency)), looped_(std::move(looped)) {
    std::size_t total = 0;
    for (const auto& list : adj_) {
        total += list.size();
    }
    m2_ = total / 2;
    loops_ = static_cast<std::size_t>(std::count(looped_.begin(), looped_.end(), true));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
    if (adj_.empty()) {
        return 0;
    }
    std::size_t best = adj_.front().size();
    for (const auto& list : adj_) {
        best = std::min(best, list.size());
    }
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m2_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<Vertex> Graph::loops() const {
    std::vector<Vertex> out;
    out.reserve(loops_);
    for (Vertex v = 0; v < n(); ++v) {
        if (looped_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Graph make_graph(std::size_t n, std::span<const Edge> two_edges, std::span<const Vertex> loops) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : two_edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::IdOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::SelfPairInTwoEdges, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& list = adj[v];
        std::sort(list.begin(), list.end());
        if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
            throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
        }
    }
    std::vector<bool> looped(n, false);
    for (Vertex v : loops) {
        if (v >= n) {
            throw Error(ErrorCode::IdOutOfRange, "loop at " + std::to_string(v) + " with n=" + std::to_string(n));
        }
        if (looped[v]) {
            throw Error(ErrorCode::DuplicateEdge, "loop at " + std::to_string(v));
        }
        looped[v] = true;
    }
    return Graph(std::move(adj), std::move(looped));
}

Graph strip_loops(const Graph& g) {
    return Graph(g.adjacency(), std::vector<bool>(g.n(), false));
}

bool is_entirely_looped(const Graph& g) {
    return g.loop_count() == g.n();
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) {
        return false;
    }
    std::vector<bool> seen(g.n(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto adj = g.adjacency();
    auto looped = g.loop_flags();
    const auto offset = static_cast<Vertex>(g.n());
    for (Vertex v = 0; v < h.n(); ++v) {
        std::vector<Vertex> list;
        list.reserve(h.degree(v));
        for (Vertex w : h.neighbors(v)) {
            list.push_back(w + offset);
        }
        adj.push_back(std::move(list));
        looped.push_back(h.is_looped(v));
    }
    return Graph(std::move(adj), std::move(looped));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> local(g.n(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<std::vector<Vertex>> adj(vertices.size());
    std::vector<bool> looped(vertices.size(), false);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (local[w] != absent) {
                adj[i].push_back(local[w]);
            }
        }
        std::sort(adj[i].begin(), adj[i].end());
        looped[i] = g.is_looped(vertices[i]);
    }
    return Graph(std::move(adj), std::move(looped));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<std::vector<Vertex>> adj(g.n());
    std::vector<bool> looped(g.n(), false);
    for (Vertex v = 0; v < g.n(); ++v) {
        auto& list = adj[perm[v]];
        for (Vertex w : g.neighbors(v)) {
            list.push_back(perm[w]);
        }
        std::sort(list.begin(), list.end());
        looped[perm[v]] = g.is_looped(v);
    }
    return Graph(std::move(adj), std::move(looped));
}

BfsOrder bfs_order(const Graph& g, Vertex root) {
    if (root >= g.n()) {
        throw Error(ErrorCode::IdOutOfRange, "BFS root " + std::to_string(root));
    }
    constexpr auto unseen = ~std::size_t{0};
    BfsOrder out;
    out.root = root;
    out.dist.assign(g.n(), unseen);
    out.order.reserve(g.n());
    out.dist[root] = 0;
    out.order.push_back(root);
    for (std::size_t head = 0; head < out.order.size(); ++head) {
        Vertex u = out.order[head];
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == unseen) {
                out.dist[w] = out.dist[u] + 1;
                out.order.push_back(w);
            }
        }
    }
    if (out.order.size() != g.n()) {
        throw Error(ErrorCode::Disconnected, "BFS from " + std::to_string(root) + " reached " +
                                                 std::to_string(out.order.size()) + " of " + std::to_string(g.n()));
    }
    for (Vertex v : out.order) {
        if (out.dist[v] >= out.levels.size()) {
            out.levels.emplace_back();
        }
        out.levels[out.dist[v]].push_back(v);
    }
    return out;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) {
        e.emplace_back(v, v + 1);
    }
    return make_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) {
        e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return make_graph(n, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return make_graph(n, e);
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return make_graph(10, e);
}

Graph hypercube_graph(std::size_t d) {
    const std::size_t n = std::size_t{1} << d;
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < d; ++b) {
            adj[v].push_back(static_cast<Vertex>(v ^ (std::size_t{1} << b)));
        }
        std::sort(adj[v].begin(), adj[v].end());
    }
    return Graph(std::move(adj), std::vector<bool>(n, false));
}

} // namespace boxfactor
