#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semicong/semilattice.hpp"

namespace semicong {

/// Set partition of {0..n-1} in canonical restricted-growth form: element 0
/// is in block 0 and each new block id is one more than the largest seen so
/// far. Two partitions are equal iff their id arrays are equal.
class Partition {
public:
    /// Renumbers arbitrary block labels into canonical form.
    static Partition from_block_ids(const std::vector<std::uint32_t>& ids);
    /// Blocks must cover {0..n-1} exactly once; n is the total element count.
    static Partition from_blocks(const std::vector<std::vector<Element>>& blocks);
    /// Parses the "[[0,1],[2,3]]" text form.
    static Partition parse(std::string_view text);

    static Partition diagonal(std::size_t n);
    static Partition full(std::size_t n);

    std::size_t size() const noexcept { return ids_.size(); }
    std::size_t block_count() const noexcept { return blocks_; }
    std::uint32_t block_of(Element x) const { return ids_.at(x); }
    bool related(Element a, Element b) const { return ids_.at(a) == ids_.at(b); }
    const std::vector<std::uint32_t>& block_ids() const noexcept { return ids_; }

    /// Blocks as sorted element lists, ordered by smallest member.
    std::vector<std::vector<Element>> blocks() const;

    /// True when every block of *this lies inside a block of `coarser`,
    /// i.e. *this is contained in `coarser` as a relation.
    bool refines(const Partition& coarser) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.ids_ <=> b.ids_; }

private:
    Partition(std::vector<std::uint32_t> ids, std::size_t blocks) : ids_(std::move(ids)), blocks_(blocks) {}

    std::vector<std::uint32_t> ids_;
    std::size_t blocks_ = 0;
};

} // namespace semicong
