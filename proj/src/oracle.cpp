#include "boxfactor/oracle.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace boxfactor {

namespace {

enum class Known : std::int8_t { Unknown = -1, Absent = 0, Present = 1 };

class SplitSearch {
public:
    SplitSearch(const Graph& g, std::size_t rows, std::size_t cols)
        : g_(g), rows_(rows), cols_(cols), cell_(rows * cols, 0), used_(g.n(), false),
          row_edge_(rows * rows, Known::Unknown), col_edge_(cols * cols, Known::Unknown) {}

    std::optional<TwoSplit> run() {
        cell_[0] = 0;
        used_[0] = true;
        if (!extend(1)) {
            return std::nullopt;
        }
        return build();
    }

private:
    // Cell t holds coordinates (t / cols, t % cols). `row_edge_` records
    // adjacency between rows a, a' (first factor), `col_edge_` between columns.
    bool place(std::size_t t, Vertex x, std::vector<std::pair<std::vector<Known>*, std::size_t>>& undo) {
        const std::size_t a = t / cols_;
        const std::size_t b = t % cols_;
        for (std::size_t s = 0; s < t; ++s) {
            const std::size_t a2 = s / cols_;
            const std::size_t b2 = s % cols_;
            const bool adjacent = g_.has_edge(x, cell_[s]);
            std::vector<Known>* table = nullptr;
            std::size_t slot = 0;
            if (a2 != a && b2 != b) {
                if (adjacent) {
                    return false;
                }
                continue;
            }
            if (a2 == a) {
                table = &col_edge_;
                slot = std::min(b, b2) * cols_ + std::max(b, b2);
            } else {
                table = &row_edge_;
                slot = std::min(a, a2) * rows_ + std::max(a, a2);
            }
            const Known want = adjacent ? Known::Present : Known::Absent;
            Known& have = (*table)[slot];
            if (have == Known::Unknown) {
                have = want;
                undo.emplace_back(table, slot);
            } else if (have != want) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t t) {
        if (t == cell_.size()) {
            return loops_decompose();
        }
        for (Vertex x = 0; x < g_.n(); ++x) {
            if (used_[x]) {
                continue;
            }
            std::vector<std::pair<std::vector<Known>*, std::size_t>> undo;
            const bool ok = place(t, x, undo);
            if (ok) {
                cell_[t] = x;
                used_[x] = true;
                if (extend(t + 1)) {
                    return true;
                }
                used_[x] = false;
            }
            for (auto [table, slot] : undo) {
                (*table)[slot] = Known::Unknown;
            }
        }
        return false;
    }

    // A loop matrix M factors as M[a][b] = row[a] | col[b] iff the maximal
    // choice row[a] = AND_b M[a][b], col[b] = AND_a M[a][b] reproduces it.
    bool loops_decompose() {
        row_loop_.assign(rows_, true);
        col_loop_.assign(cols_, true);
        for (std::size_t t = 0; t < cell_.size(); ++t) {
            const bool looped = g_.is_looped(cell_[t]);
            if (!looped) {
                row_loop_[t / cols_] = false;
                col_loop_[t % cols_] = false;
            }
        }
        for (std::size_t t = 0; t < cell_.size(); ++t) {
            if (g_.is_looped(cell_[t]) != (row_loop_[t / cols_] || col_loop_[t % cols_])) {
                return false;
            }
        }
        return true;
    }

    TwoSplit build() const {
        auto factor = [](std::size_t size, const std::vector<Known>& edges, const std::vector<bool>& loops) {
            std::vector<Edge> e;
            std::vector<Vertex> l;
            for (Vertex u = 0; u < size; ++u) {
                for (Vertex v = u + 1; v < size; ++v) {
                    if (edges[u * size + v] == Known::Present) {
                        e.emplace_back(u, v);
                    }
                }
                if (loops[u]) {
                    l.push_back(u);
                }
            }
            return make_graph(size, e, l);
        };
        std::vector<std::size_t> coords(g_.n() * 2);
        for (std::size_t t = 0; t < cell_.size(); ++t) {
            coords[cell_[t] * 2] = t / cols_;
            coords[cell_[t] * 2 + 1] = t % cols_;
        }
        return {factor(rows_, row_edge_, row_loop_), factor(cols_, col_edge_, col_loop_),
                *Coordinatization::from_coords({rows_, cols_}, std::move(coords))};
    }

    const Graph& g_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Vertex> cell_;
    std::vector<bool> used_;
    std::vector<Known> row_edge_;
    std::vector<Known> col_edge_;
    std::vector<bool> row_loop_;
    std::vector<bool> col_loop_;
};

std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

bool coin(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    }
    return perm;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double edge_p, double loop_p) {
    std::set<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        const auto u = static_cast<Vertex>(uniform_below(rng, v));
        edges.emplace(u, v);
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!edges.contains({u, v}) && coin(rng, edge_p)) {
                edges.emplace(u, v);
            }
        }
    }
    std::vector<Vertex> loops;
    for (Vertex v = 0; v < n; ++v) {
        if (coin(rng, loop_p)) {
            loops.push_back(v);
        }
    }
    const std::vector<Edge> list(edges.begin(), edges.end());
    const auto g = make_graph(n, list, loops);
    const auto perm = random_permutation(rng, n);
    return relabel(g, perm);
}

} // namespace

std::optional<TwoSplit> brute_force_two_split(const Graph& g, std::size_t max_vertices) {
    if (g.n() > max_vertices) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    std::to_string(g.n()) + " vertices, cap " + std::to_string(max_vertices));
    }
    const std::size_t n = g.n();
    for (std::size_t rows = 2; rows * 2 <= n; ++rows) {
        if (n % rows != 0) {
            continue;
        }
        if (auto split = SplitSearch(g, rows, n / rows).run()) {
            return split;
        }
    }
    return std::nullopt;
}

Factorization brute_force_factor(const Graph& g, std::size_t max_vertices) {
    if (g.n() == 0) {
        throw Error(ErrorCode::Trivial, "empty graph");
    }
    if (is_entirely_looped(g)) {
        throw Error(ErrorCode::NoUnloopedVertex, "all " + std::to_string(g.n()) + " vertices are looped");
    }
    if (!is_connected(g)) {
        throw Error(ErrorCode::Disconnected, "");
    }
    if (g.n() == 1) {
        return {{}, *Coordinatization::from_coords({}, {})};
    }
    auto split = brute_force_two_split(g, max_vertices);
    if (!split) {
        std::vector<std::size_t> coords(g.n());
        std::iota(coords.begin(), coords.end(), std::size_t{0});
        return {{g}, *Coordinatization::from_coords({g.n()}, std::move(coords))};
    }
    auto left = brute_force_factor(split->first, max_vertices);
    auto right = brute_force_factor(split->second, max_vertices);
    Factorization out;
    out.primes = std::move(left.primes);
    out.primes.insert(out.primes.end(), right.primes.begin(), right.primes.end());
    std::vector<std::size_t> sizes = left.coord.sizes();
    sizes.insert(sizes.end(), right.coord.sizes().begin(), right.coord.sizes().end());
    std::vector<std::size_t> coords;
    coords.reserve(g.n() * sizes.size());
    for (Vertex v = 0; v < g.n(); ++v) {
        auto outer = split->coord.coords(v);
        auto a = left.coord.coords(static_cast<Vertex>(outer[0]));
        auto b = right.coord.coords(static_cast<Vertex>(outer[1]));
        coords.insert(coords.end(), a.begin(), a.end());
        coords.insert(coords.end(), b.begin(), b.end());
    }
    out.coord = *Coordinatization::from_coords(std::move(sizes), std::move(coords));
    return out;
}

Graph random_connected_graph(std::size_t n, double edge_probability, double loop_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_connected(rng, n, edge_probability, loop_probability);
}

RandomInstance random_instance(const InstanceSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    RandomInstance out;
    const std::size_t lo = std::max<std::size_t>(spec.min_size, 1);
    const std::size_t hi = std::max(spec.max_size, lo);
    for (std::size_t i = 0; i < spec.factors; ++i) {
        const std::size_t size = lo + uniform_below(rng, hi - lo + 1);
        auto g = random_connected(rng, size, spec.edge_probability, spec.loop_probability);
        if (is_entirely_looped(g)) {
            const auto victim = uniform_below(rng, size);
            auto flags = g.loop_flags();
            flags[victim] = false;
            g = Graph(g.adjacency(), std::move(flags));
        }
        out.generators.push_back(std::move(g));
    }
    auto product = cartesian_product(out.generators);
    if (!spec.shuffle_vertices) {
        out.product = std::move(product.graph);
        out.coord = std::move(product.coord);
        return out;
    }
    const auto perm = random_permutation(rng, product.graph.n());
    out.product = relabel(product.graph, perm);
    const std::size_t k = product.coord.k();
    std::vector<std::size_t> coords(product.graph.n() * k);
    for (Vertex v = 0; v < product.graph.n(); ++v) {
        auto tuple = product.coord.coords(v);
        std::copy(tuple.begin(), tuple.end(), coords.begin() + perm[v] * k);
    }
    out.coord = *Coordinatization::from_coords(product.coord.sizes(), std::move(coords));
    return out;
}

std::vector<Graph> labeled_connected_graphs(std::size_t n) {
    if (n > 6) {
        throw Error(ErrorCode::SizeLimitExceeded, std::to_string(n) + " vertices, cap 6");
    }
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                e.push_back(pairs[i]);
            }
        }
        auto g = make_graph(n, e);
        if (is_connected(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> unlabeled_connected_graphs(std::size_t n) {
    if (n > 6) {
        throw Error(ErrorCode::SizeLimitExceeded, std::to_string(n) + " vertices, cap 6");
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::vector<std::vector<Vertex>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Canonical form: lexicographically smallest permuted adjacency bitmask.
    auto code = [&](const Graph& g, const std::vector<Vertex>& p) {
        std::uint64_t bits = 0;
        for (auto [u, v] : g.edges()) {
            const auto a = std::min(p[u], p[v]);
            const auto b = std::max(p[u], p[v]);
            bits |= std::uint64_t{1} << (a * n + b);
        }
        return bits;
    };
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (auto& g : labeled_connected_graphs(n)) {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& p : perms) {
            best = std::min(best, code(g, p));
        }
        if (seen.insert(best).second) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

Graph with_loop_mask(const Graph& skeleton, std::uint64_t mask) {
    std::vector<bool> flags(skeleton.n());
    for (std::size_t v = 0; v < skeleton.n(); ++v) {
        flags[v] = ((mask >> v) & 1U) != 0;
    }
    return Graph(skeleton.adjacency(), std::move(flags));
}

} // namespace boxfactor
