#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace boxfactor {

/// Union-find with path halving and union by rank.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n = 0) : parent_(n), rank_(n, 0), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t set_count() const noexcept { return sets_; }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Non-compressing lookup for const contexts.
    std::uint32_t find(std::uint32_t x) const {
        while (parent_[x] != x) {
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if x and y were already joined.
    bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            return false;
        }
        if (rank_[x] < rank_[y]) {
            std::swap(x, y);
        }
        parent_[y] = x;
        if (rank_[x] == rank_[y]) {
            ++rank_[x];
        }
        --sets_;
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t sets_;
};

} // namespace boxfactor
