#include "semicong/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace semicong {

Partition Partition::from_block_ids(const std::vector<std::uint32_t>& ids) {
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    std::vector<std::uint32_t> canon(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto [it, inserted] = renumber.emplace(ids[i], static_cast<std::uint32_t>(renumber.size()));
        canon[i] = it->second;
    }
    const std::size_t blocks = renumber.size();
    return Partition(std::move(canon), blocks);
}

Partition Partition::from_blocks(const std::vector<std::vector<Element>>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (b.empty())
            throw InvalidInput("partition has an empty block");
        n += b.size();
    }
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> ids(n, unset);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (Element x : blocks[k]) {
            if (x >= n)
                throw InvalidInput("partition element " + std::to_string(x) + " out of range for n=" +
                                   std::to_string(n));
            if (ids[x] != unset)
                throw InvalidInput("partition element " + std::to_string(x) + " appears twice");
            ids[x] = static_cast<std::uint32_t>(k);
        }
    return from_block_ids(ids);
}

Partition Partition::parse(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed partition \"" + std::string(text) + "\": " + e.what());
    }
    if (!doc.is_array())
        throw InvalidInput("partition must be a JSON array of arrays");
    std::vector<std::vector<Element>> blocks;
    for (const auto& b : doc) {
        if (!b.is_array())
            throw InvalidInput("partition block must be an array");
        auto& out = blocks.emplace_back();
        for (const auto& x : b) {
            if (!x.is_number_unsigned())
                throw InvalidInput("partition entries must be non-negative integers");
            out.push_back(x.get<Element>());
        }
    }
    return from_blocks(blocks);
}

Partition Partition::diagonal(std::size_t n) {
    std::vector<std::uint32_t> ids(n);
    for (std::size_t i = 0; i < n; ++i)
        ids[i] = static_cast<std::uint32_t>(i);
    return Partition(std::move(ids), n);
}

Partition Partition::full(std::size_t n) {
    return Partition(std::vector<std::uint32_t>(n, 0), n ? 1 : 0);
}

std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out(blocks_);
    for (std::size_t x = 0; x < ids_.size(); ++x)
        out[ids_[x]].push_back(x);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size())
        return false;
    // Each fine block maps to one coarse block.
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> image(blocks_, unset);
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        auto& slot = image[ids_[x]];
        if (slot == unset)
            slot = coarser.ids_[x];
        else if (slot != coarser.ids_[x])
            return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    const auto bs = blocks();
    for (std::size_t k = 0; k < bs.size(); ++k) {
        os << (k ? "," : "") << '[';
        for (std::size_t i = 0; i < bs[k].size(); ++i)
            os << (i ? "," : "") << bs[k][i];
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace semicong
