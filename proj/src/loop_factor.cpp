#include "boxfactor/loop_factor.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace boxfactor {

namespace {

struct PartProjection {
    std::uint32_t part;
    std::size_t box_index;
};

// Projections of v onto every part meeting support(v).
void touched_parts(const RelativeCoordinates& rc, const FactorPartition& partition, Vertex v,
                   std::vector<PartProjection>& out) {
    out.clear();
    auto tuple = rc.coord(v);
    for (auto j : rc.support(v)) {
        const auto part = partition.part_of(j);
        auto it = std::find_if(out.begin(), out.end(), [&](const PartProjection& p) { return p.part == part; });
        if (it == out.end()) {
            out.push_back({part, 0});
            it = out.end() - 1;
        }
        it->box_index += tuple[j] * rc.strides[j];
    }
}

ConditionCheck evaluate(const RelativeCoordinates& rc, const Graph& g, Vertex v,
                        const std::vector<PartProjection>& projections) {
    ConditionCheck check;
    check.inspected_parts = projections.size();
    bool any_looped = false;
    for (const auto& p : projections) {
        any_looped = any_looped || g.is_looped(rc.lookup[p.box_index]);
    }
    if (!g.is_looped(v) && any_looped) {
        check.kind = Condition::UnloopedButProjectionLooped;
    } else if (g.is_looped(v) && !any_looped) {
        check.kind = Condition::LoopedButNoProjectionLooped;
    }
    return check;
}

void require_factorable(const Graph& g) {
    if (g.n() == 0) {
        throw Error(ErrorCode::Trivial, "empty graph");
    }
    if (is_entirely_looped(g)) {
        throw Error(ErrorCode::NoUnloopedVertex, "all " + std::to_string(g.n()) + " vertices are looped");
    }
    if (!is_connected(g)) {
        throw Error(ErrorCode::Disconnected, "");
    }
}

Factorization empty_factorization() {
    return {{}, *Coordinatization::from_coords({}, {})};
}

} // namespace

RelativeCoordinates relative_coordinates(const Graph& g, Vertex root) {
    if (root >= g.n()) {
        throw Error(ErrorCode::IdOutOfRange, "root " + std::to_string(root));
    }
    if (g.is_looped(root)) {
        throw Error(ErrorCode::RootLooped, "root " + std::to_string(root));
    }
    if (g.n() < 2) {
        throw Error(ErrorCode::Trivial, "n=" + std::to_string(g.n()));
    }
    return relative_coordinates(g, factor_simple(strip_loops(g), root), root);
}

RelativeCoordinates relative_coordinates(const Graph& g, const Factorization& skeleton, Vertex root) {
    if (root >= g.n()) {
        throw Error(ErrorCode::IdOutOfRange, "root " + std::to_string(root));
    }
    if (g.is_looped(root)) {
        throw Error(ErrorCode::RootLooped, "root " + std::to_string(root));
    }
    const auto& base = skeleton.coord;
    RelativeCoordinates rc;
    rc.root = root;
    rc.sizes = base.sizes();
    rc.strides = base.strides();
    const std::size_t n = g.n();
    const std::size_t r = rc.r();
    auto origin = base.coords(root);
    rc.coords.resize(n * r);
    rc.support_offsets.assign(n + 1, 0);
    rc.lookup.resize(n);
    rc.support_indices.reserve(n * r);
    for (Vertex v = 0; v < n; ++v) {
        auto tuple = base.coords(v);
        std::size_t index = 0;
        for (std::size_t j = 0; j < r; ++j) {
            // Swap the root's value with 0 in every factor.
            auto x = tuple[j];
            if (x == origin[j]) {
                x = 0;
            } else if (x == 0) {
                x = origin[j];
            }
            rc.coords[v * r + j] = x;
            index += x * rc.strides[j];
            if (x != 0) {
                rc.support_indices.push_back(static_cast<std::uint32_t>(j));
            }
        }
        rc.support_offsets[v + 1] = rc.support_indices.size();
        rc.lookup[index] = v;
    }
    return rc;
}

std::vector<std::vector<std::uint32_t>> FactorPartition::parts() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::size_t> slot(base_count(), ~std::size_t{0});
    for (std::uint32_t j = 0; j < base_count(); ++j) {
        const auto rep = part_of(j);
        if (slot[rep] == ~std::size_t{0}) {
            slot[rep] = out.size();
            out.emplace_back();
        }
        out[slot[rep]].push_back(j);
    }
    return out;
}

Vertex project_to_part(const RelativeCoordinates& rc, const FactorPartition& partition, Vertex v,
                       std::uint32_t part_member) {
    const auto part = partition.part_of(part_member);
    auto tuple = rc.coord(v);
    std::size_t index = 0;
    for (auto j : rc.support(v)) {
        if (partition.part_of(j) == part) {
            index += tuple[j] * rc.strides[j];
        }
    }
    return rc.lookup[index];
}

ConditionCheck check_conditions(const RelativeCoordinates& rc, const FactorPartition& partition, Vertex v,
                                const Graph& g) {
    std::vector<PartProjection> projections;
    touched_parts(rc, partition, v, projections);
    return evaluate(rc, g, v, projections);
}

FactorPartition merge_nonroot_parts(const RelativeCoordinates& rc, FactorPartition partition, Vertex v) {
    auto support = rc.support(v);
    bool merged = false;
    for (std::size_t i = 1; i < support.size(); ++i) {
        merged = partition.merge(support[0], support[i]) || merged;
    }
    if (!merged) {
        throw Error(ErrorCode::NothingToMerge, "support of vertex " + std::to_string(v) + " meets a single part");
    }
    return partition;
}

Factorization assemble_factors(const Graph& g, const RelativeCoordinates& rc, const FactorPartition& partition) {
    const auto parts = partition.parts();
    const std::size_t n = g.n();
    std::vector<Graph> layers;
    std::vector<std::size_t> part_sizes;
    layers.reserve(parts.size());
    for (const auto& part : parts) {
        std::size_t volume = 1;
        for (auto j : part) {
            volume *= rc.sizes[j];
        }
        // Row-major over the part's base coordinates, others at the origin.
        std::vector<Vertex> members(volume);
        for (std::size_t t = 0; t < volume; ++t) {
            std::size_t rest = t;
            std::size_t index = 0;
            for (std::size_t q = part.size(); q-- > 0;) {
                const auto j = part[q];
                index += (rest % rc.sizes[j]) * rc.strides[j];
                rest /= rc.sizes[j];
            }
            members[t] = rc.lookup[index];
        }
        layers.push_back(induced_subgraph(g, members));
        part_sizes.push_back(volume);
    }

    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = layers[a];
        const auto& y = layers[b];
        return std::tuple{x.n(), x.two_edge_count(), x.loop_count()} <
               std::tuple{y.n(), y.two_edge_count(), y.loop_count()};
    });

    const std::size_t k = parts.size();
    std::vector<std::size_t> coords(n * k);
    std::vector<std::size_t> sizes(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& part = parts[order[i]];
        sizes[i] = part_sizes[order[i]];
        for (Vertex v = 0; v < n; ++v) {
            auto tuple = rc.coord(v);
            std::size_t local = 0;
            for (auto j : part) {
                local = local * rc.sizes[j] + tuple[j];
            }
            coords[v * k + i] = local;
        }
    }
    Factorization out;
    for (auto i : order) {
        out.primes.push_back(std::move(layers[i]));
    }
    out.coord = *Coordinatization::from_coords(std::move(sizes), std::move(coords));
    return out;
}

Vertex lowest_unlooped_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!g.is_looped(v)) {
            return v;
        }
    }
    throw Error(ErrorCode::NoUnloopedVertex, "all " + std::to_string(g.n()) + " vertices are looped");
}

Factorization loop_merge_stage(const Graph& g, const Factorization& skeleton, Vertex root, ScanStats* stats) {
    const auto rc = relative_coordinates(g, skeleton, root);
    const auto bfs = bfs_order(g, root);
    FactorPartition partition(rc.r());
    ScanStats local;
    local.base_factors = rc.r();
    std::vector<PartProjection> projections;
    projections.reserve(rc.r());
    for (Vertex v : bfs.order) {
        touched_parts(rc, partition, v, projections);
        const auto check = evaluate(rc, g, v, projections);
        local.inspections += check.inspected_parts;
        if (check.kind != Condition::Ok) {
            partition = merge_nonroot_parts(rc, std::move(partition), v);
            ++local.merges;
            local.part_trace.push_back(partition.part_count());
        }
    }
    auto out = assemble_factors(g, rc, partition);
    if (stats != nullptr) {
        *stats = std::move(local);
    }
    return out;
}

Factorization factor_loops_linear(const Graph& g, ScanStats* stats) {
    require_factorable(g);
    if (g.n() == 1) {
        if (stats != nullptr) {
            *stats = {};
        }
        return empty_factorization();
    }
    const Vertex root = lowest_unlooped_vertex(g);
    return loop_merge_stage(g, factor_simple(strip_loops(g), root), root, stats);
}

Factorization factor_loops_subset_scan(const Graph& g, ScanStats* stats) {
    require_factorable(g);
    if (g.n() == 1) {
        if (stats != nullptr) {
            *stats = {};
        }
        return empty_factorization();
    }
    const Vertex root = lowest_unlooped_vertex(g);
    const auto rc = relative_coordinates(g, root);
    const std::size_t r = rc.r();
    if (r >= 64) {
        throw Error(ErrorCode::SizeLimitExceeded, std::to_string(r) + " base factors");
    }
    const std::uint64_t everything = (std::uint64_t{1} << r) - 1;
    auto project = [&](Vertex v, std::uint64_t mask) {
        auto tuple = rc.coord(v);
        std::size_t index = 0;
        for (auto j : rc.support(v)) {
            if ((mask >> j) & 1U) {
                index += tuple[j] * rc.strides[j];
            }
        }
        return rc.lookup[index];
    };

    ScanStats local;
    local.base_factors = r;
    std::vector<std::uint64_t> masks(everything);
    std::iota(masks.begin(), masks.end(), std::uint64_t{1});
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

    FactorPartition partition(r);
    std::uint64_t accepted = 0;
    for (auto mask : masks) {
        if (accepted == everything) {
            break;
        }
        if ((mask & accepted) != 0) {
            continue;
        }
        const auto complement = everything & ~mask;
        bool splits = true;
        for (Vertex v = 0; v < g.n() && splits; ++v) {
            local.inspections += 2;
            const bool expected = g.is_looped(project(v, mask)) || g.is_looped(project(v, complement));
            splits = expected == g.is_looped(v);
        }
        if (!splits) {
            continue;
        }
        accepted |= mask;
        const auto first = static_cast<std::uint32_t>(std::countr_zero(mask));
        for (std::uint32_t j = first + 1; j < r; ++j) {
            if ((mask >> j) & 1U) {
                partition.merge(first, j);
                ++local.merges;
            }
        }
        local.part_trace.push_back(partition.part_count());
    }
    auto out = assemble_factors(g, rc, partition);
    if (stats != nullptr) {
        *stats = std::move(local);
    }
    return out;
}

bool verify_factorization(const Graph& g, const Factorization& f) {
    const auto& c = f.coord;
    if (c.n() != g.n() || c.k() != f.primes.size()) {
        return false;
    }
    if (f.primes.empty()) {
        return g.n() == 1 && !g.is_looped(0);
    }
    for (std::size_t i = 0; i < c.k(); ++i) {
        if (c.sizes()[i] != f.primes[i].n()) {
            return false;
        }
    }
    const auto product = cartesian_product(f.primes);
    if (product.graph.two_edge_count() != g.two_edge_count()) {
        return false;
    }
    // Row-major numbering of the product matches box positions of c.
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto pv = static_cast<Vertex>(c.box_index(c.coords(v)));
        if (product.graph.is_looped(pv) != g.is_looped(v)) {
            return false;
        }
        for (Vertex w : g.neighbors(v)) {
            const auto pw = static_cast<Vertex>(c.box_index(c.coords(w)));
            if (!product.graph.has_edge(pv, pw)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace boxfactor
