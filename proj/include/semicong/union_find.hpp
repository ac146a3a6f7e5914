#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "semicong/partition.hpp"

namespace semicong {

/// Disjoint sets over {0..n-1} with path compression and union by rank.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root)
            x = std::exchange(parent_[x], root);
        return root;
    }

    /// Returns false when a and b were already in the same set.
    bool merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        ++merges_;
        return true;
    }

    std::size_t merges() const noexcept { return merges_; }

    Partition to_partition() {
        std::vector<std::uint32_t> roots(parent_.size());
        for (std::size_t x = 0; x < parent_.size(); ++x)
            roots[x] = find(static_cast<std::uint32_t>(x));
        return Partition::from_block_ids(roots);
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t merges_ = 0;
};

} // namespace semicong
