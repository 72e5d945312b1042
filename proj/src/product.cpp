#include "boxfactor/product.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <string>

namespace boxfactor {

namespace {

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> strides(sizes.size(), 1);
    for (std::size_t i = sizes.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * sizes[i];
    }
    return strides;
}

std::size_t box_volume(const std::vector<std::size_t>& sizes) {
    std::size_t volume = 1;
    for (auto s : sizes) {
        volume *= s;
    }
    return volume;
}

} // namespace

std::optional<Coordinatization> Coordinatization::from_coords(std::vector<std::size_t> sizes,
                                                              std::vector<std::size_t> coords) {
    const std::size_t k = sizes.size();
    const std::size_t volume = box_volume(sizes);
    if (coords.size() != volume * k) {
        return std::nullopt;
    }
    Coordinatization c;
    c.strides_ = row_major_strides(sizes);
    c.sizes_ = std::move(sizes);
    constexpr Vertex unset = ~Vertex{0};
    c.lookup_.assign(volume, unset);
    for (std::size_t v = 0; v < volume; ++v) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const auto x = coords[v * k + i];
            if (x >= c.sizes_[i]) {
                return std::nullopt;
            }
            index += x * c.strides_[i];
        }
        if (c.lookup_[index] != unset) {
            return std::nullopt;
        }
        c.lookup_[index] = static_cast<Vertex>(v);
    }
    c.coords_ = std::move(coords);
    return c;
}

Coordinatization Coordinatization::row_major(std::vector<std::size_t> sizes) {
    Coordinatization c;
    c.strides_ = row_major_strides(sizes);
    const std::size_t volume = box_volume(sizes);
    const std::size_t k = sizes.size();
    c.coords_.resize(volume * k);
    c.lookup_.resize(volume);
    for (std::size_t v = 0; v < volume; ++v) {
        for (std::size_t i = 0; i < k; ++i) {
            c.coords_[v * k + i] = (v / c.strides_[i]) % sizes[i];
        }
        c.lookup_[v] = static_cast<Vertex>(v);
    }
    c.sizes_ = std::move(sizes);
    return c;
}

std::size_t Coordinatization::box_index(std::span<const std::size_t> tuple) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        index += tuple[i] * strides_[i];
    }
    return index;
}

Coordinatization Coordinatization::permuted(std::span<const std::size_t> order) const {
    std::vector<std::size_t> sizes(k());
    for (std::size_t i = 0; i < k(); ++i) {
        sizes[i] = sizes_[order[i]];
    }
    std::vector<std::size_t> coords(coords_.size());
    for (std::size_t v = 0; v < n(); ++v) {
        for (std::size_t i = 0; i < k(); ++i) {
            coords[v * k() + i] = coords_[v * k() + order[i]];
        }
    }
    return *from_coords(std::move(sizes), std::move(coords));
}

Product cartesian_product(std::span<const Graph> factors) {
    if (factors.empty()) {
        throw Error(ErrorCode::EmptyFactorList, "");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].n() == 0) {
            throw Error(ErrorCode::EmptyFactor, "factor " + std::to_string(i));
        }
        sizes.push_back(factors[i].n());
    }
    auto coord = Coordinatization::row_major(sizes);
    const std::size_t n = coord.n();
    const auto& strides = coord.strides();
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<bool> looped(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        auto tuple = coord.coords(static_cast<Vertex>(v));
        auto& list = adj[v];
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto x = static_cast<Vertex>(tuple[i]);
            const std::size_t base = v - x * strides[i];
            for (Vertex y : factors[i].neighbors(x)) {
                list.push_back(static_cast<Vertex>(base + y * strides[i]));
            }
            if (factors[i].is_looped(x)) {
                looped[v] = true;
            }
        }
        std::sort(list.begin(), list.end());
    }
    return {Graph(std::move(adj), std::move(looped)), std::move(coord)};
}

std::size_t projection(const Coordinatization& c, Vertex v, std::size_t i) {
    if (i >= c.k()) {
        throw Error(ErrorCode::IndexOutOfRange, "factor index " + std::to_string(i) + " with k=" + std::to_string(c.k()));
    }
    if (v >= c.n()) {
        throw Error(ErrorCode::IdOutOfRange, "vertex " + std::to_string(v));
    }
    return c.coords(v)[i];
}

Layer layer_subgraph(const Graph& g, const Coordinatization& c, Vertex a, std::size_t i) {
    if (i >= c.k()) {
        throw Error(ErrorCode::IndexOutOfRange, "factor index " + std::to_string(i) + " with k=" + std::to_string(c.k()));
    }
    std::vector<std::size_t> tuple(c.coords(a).begin(), c.coords(a).end());
    Layer out;
    out.vertex_map.resize(c.sizes()[i]);
    for (std::size_t x = 0; x < c.sizes()[i]; ++x) {
        tuple[i] = x;
        out.vertex_map[x] = c.lookup(tuple);
    }
    out.graph = induced_subgraph(g, out.vertex_map);
    return out;
}

} // namespace boxfactor
