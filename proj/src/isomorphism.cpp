#include "boxfactor/isomorphism.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace boxfactor {

namespace {

using Colors = std::vector<std::uint32_t>;

// Refines colours of the disjoint union g + h until stable. Returns false as
// soon as the two sides disagree on a colour histogram.
bool refine_jointly(const Graph& g, const Graph& h, Colors& colors) {
    const std::size_t n = g.n();
    auto neighbors = [&](std::size_t x) { return x < n ? g.neighbors(static_cast<Vertex>(x)) : h.neighbors(static_cast<Vertex>(x - n)); };
    auto balanced = [&](const Colors& c, std::size_t classes) {
        std::vector<long> diff(classes, 0);
        for (std::size_t x = 0; x < n; ++x) {
            ++diff[c[x]];
            --diff[c[x + n]];
        }
        return std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; });
    };

    std::map<std::pair<bool, std::size_t>, std::uint32_t> seed;
    for (std::size_t x = 0; x < 2 * n; ++x) {
        const bool looped = x < n ? g.is_looped(static_cast<Vertex>(x)) : h.is_looped(static_cast<Vertex>(x - n));
        seed.emplace(std::pair{looped, neighbors(x).size()}, 0);
    }
    std::uint32_t next = 0;
    for (auto& [key, id] : seed) {
        id = next++;
    }
    colors.resize(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) {
        const bool looped = x < n ? g.is_looped(static_cast<Vertex>(x)) : h.is_looped(static_cast<Vertex>(x - n));
        colors[x] = seed.at({looped, neighbors(x).size()});
    }
    std::size_t classes = seed.size();
    if (!balanced(colors, classes)) {
        return false;
    }
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
        std::vector<std::vector<std::uint32_t>> sig(2 * n);
        for (std::size_t x = 0; x < 2 * n; ++x) {
            auto& s = sig[x];
            s.push_back(colors[x]);
            for (Vertex w : neighbors(x)) {
                s.push_back(colors[x < n ? w : w + n]);
            }
            std::sort(s.begin() + 1, s.end());
            signatures.emplace(s, 0);
        }
        std::uint32_t id = 0;
        for (auto& [key, value] : signatures) {
            value = id++;
        }
        Colors refined(2 * n);
        for (std::size_t x = 0; x < 2 * n; ++x) {
            refined[x] = signatures.at(sig[x]);
        }
        if (!balanced(refined, signatures.size())) {
            return false;
        }
        colors = std::move(refined);
        if (signatures.size() == classes) {
            return true;
        }
        classes = signatures.size();
    }
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h, Colors colors) : g_(g), h_(h), colors_(std::move(colors)) {
        const std::size_t n = g.n();
        map_.assign(n, kUnmapped);
        used_.assign(n, false);
        order_ = search_order();
    }

    std::optional<std::vector<Vertex>> run() {
        if (extend(0)) {
            return map_;
        }
        return std::nullopt;
    }

private:
    static constexpr Vertex kUnmapped = ~Vertex{0};

    // Next vertex: most already-ordered neighbours, then smallest colour class.
    std::vector<Vertex> search_order() const {
        const std::size_t n = g_.n();
        std::vector<std::size_t> class_size(2 * n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            ++class_size[colors_[v]];
        }
        std::vector<Vertex> order;
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> links(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            Vertex best = kUnmapped;
            for (Vertex v = 0; v < n; ++v) {
                if (placed[v]) {
                    continue;
                }
                if (best == kUnmapped || links[v] > links[best] ||
                    (links[v] == links[best] && class_size[colors_[v]] < class_size[colors_[best]])) {
                    best = v;
                }
            }
            placed[best] = true;
            order.push_back(best);
            for (Vertex w : g_.neighbors(best)) {
                ++links[w];
            }
        }
        return order;
    }

    bool consistent(Vertex v, Vertex w) const {
        if (colors_[v] != colors_[w + g_.n()]) {
            return false;
        }
        std::size_t mapped_neighbors = 0;
        for (Vertex u : g_.neighbors(v)) {
            if (map_[u] != kUnmapped) {
                if (!h_.has_edge(map_[u], w)) {
                    return false;
                }
                ++mapped_neighbors;
            }
        }
        // Equal counts rule out extra H-edges towards mapped vertices.
        std::size_t image_neighbors = 0;
        for (Vertex x : h_.neighbors(w)) {
            if (used_[x]) {
                ++image_neighbors;
            }
        }
        return image_neighbors == mapped_neighbors;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            return true;
        }
        const Vertex v = order_[depth];
        Vertex anchor = kUnmapped;
        for (Vertex u : g_.neighbors(v)) {
            if (map_[u] != kUnmapped) {
                anchor = u;
                break;
            }
        }
        auto attempt = [&](Vertex w) {
            if (used_[w] || !consistent(v, w)) {
                return false;
            }
            map_[v] = w;
            used_[w] = true;
            if (extend(depth + 1)) {
                return true;
            }
            map_[v] = kUnmapped;
            used_[w] = false;
            return false;
        };
        if (anchor != kUnmapped) {
            for (Vertex w : h_.neighbors(map_[anchor])) {
                if (attempt(w)) {
                    return true;
                }
            }
            return false;
        }
        for (Vertex w = 0; w < h_.n(); ++w) {
            if (attempt(w)) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    Colors colors_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h, IsomorphismOptions options) {
    const std::size_t largest = std::max(g.n(), h.n());
    if (largest > options.max_vertices) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    std::to_string(largest) + " vertices, cap " + std::to_string(options.max_vertices));
    }
    if (g.n() != h.n() || g.two_edge_count() != h.two_edge_count() || g.loop_count() != h.loop_count()) {
        return std::nullopt;
    }
    if (g.n() == 0) {
        return std::vector<Vertex>{};
    }
    Colors colors;
    if (!refine_jointly(g, h, colors)) {
        return std::nullopt;
    }
    return Matcher(g, h, std::move(colors)).run();
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& phi) {
    if (g.n() != h.n() || phi.size() != g.n() || g.two_edge_count() != h.two_edge_count()) {
        return false;
    }
    std::vector<bool> hit(h.n(), false);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (phi[v] >= h.n() || hit[phi[v]]) {
            return false;
        }
        hit[phi[v]] = true;
        if (g.is_looped(v) != h.is_looped(phi[v])) {
            return false;
        }
        for (Vertex w : g.neighbors(v)) {
            if (!h.has_edge(phi[v], phi[w])) {
                return false;
            }
        }
    }
    return true;
}

bool same_prime_multiset(const std::vector<Graph>& a, const std::vector<Graph>& b, IsomorphismOptions options) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<bool> taken(b.size(), false);
    for (const auto& p : a) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size() && !matched; ++j) {
            if (!taken[j] && find_isomorphism(p, b[j], options)) {
                taken[j] = true;
                matched = true;
            }
        }
        if (!matched) {
            return false;
        }
    }
    return true;
}

} // namespace boxfactor
