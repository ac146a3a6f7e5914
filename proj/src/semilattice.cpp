#include "semicong/semilattice.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace semicong {

std::optional<AxiomViolation>
Semilattice::find_axiom_violation(const std::vector<std::vector<Element>>& table) {
    const std::size_t n = table.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (table[x].size() != n)
            throw InvalidInput("join table row " + std::to_string(x) + " has length " +
                               std::to_string(table[x].size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (table[x][y] >= n)
                return AxiomViolation(AxiomKind::OutOfRangeEntry, {x, y});
    for (std::size_t x = 0; x < n; ++x)
        if (table[x][x] != x)
            return AxiomViolation(AxiomKind::NotIdempotent, {x});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (table[x][y] != table[y][x])
                return AxiomViolation(AxiomKind::NotCommutative, {x, y});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    return AxiomViolation(AxiomKind::NotAssociative, {x, y, z});
    return std::nullopt;
}

Semilattice Semilattice::validate(const std::vector<std::vector<Element>>& table,
                                  std::vector<std::string> labels, Orientation orientation) {
    const std::size_t n = table.size();
    if (n == 0)
        throw InvalidInput("join table must have at least one element");
    if (n > kMaxElements)
        throw SizeCapExceeded(n, kMaxElements);
    if (!labels.empty() && labels.size() != n)
        throw InvalidInput("expected " + std::to_string(n) + " labels, got " +
                           std::to_string(labels.size()));
    if (auto violation = find_axiom_violation(table))
        throw *violation;

    Semilattice s;
    s.n_ = n;
    s.orientation_ = orientation;
    s.labels_ = std::move(labels);
    s.table_.resize(n * n);
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
    };
    mix(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            s.table_[x * n + y] = static_cast<std::uint8_t>(table[x][y]);
            mix(table[x][y]);
        }
    s.fingerprint_ = h;
    Element top = 0;
    for (Element x = 1; x < n; ++x)
        top = s.op(top, x);
    s.top_ = top;
    return s;
}

void Semilattice::check_element(Element x) const {
    if (x >= n_)
        throw InvalidInput("element index " + std::to_string(x) + " out of range for n=" +
                           std::to_string(n_));
}

Element Semilattice::join(Element x, Element y) const {
    check_element(x);
    check_element(y);
    return op(x, y);
}

bool Semilattice::leq(Element x, Element y) const {
    check_element(x);
    check_element(y);
    return orientation_ == Orientation::Join ? below(x, y) : below(y, x);
}

std::string Semilattice::label(Element x) const {
    check_element(x);
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::vector<std::vector<Element>> Semilattice::table() const {
    std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
            out[x][y] = op(x, y);
    return out;
}

std::string set_label(std::uint64_t mask) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    while (mask) {
        os << (first ? "" : ",") << std::countr_zero(mask);
        first = false;
        mask &= mask - 1;
    }
    os << '}';
    return os.str();
}

Semilattice from_union_closed(std::span<const std::uint64_t> family, std::vector<std::string> labels) {
    if (family.empty())
        throw FamilyError(FamilyError::Kind::Empty, 0, 0);
    if (family.size() > kMaxElements)
        throw SizeCapExceeded(family.size(), kMaxElements);

    std::unordered_map<std::uint64_t, Element> index;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto [it, inserted] = index.emplace(family[i], i);
        if (!inserted)
            throw FamilyError(FamilyError::Kind::DuplicateSet, it->second, i);
    }

    const std::size_t n = family.size();
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const std::uint64_t u = family[i] | family[j];
            auto it = index.find(u);
            if (it == index.end())
                throw FamilyError(FamilyError::Kind::NotUnionClosed, i, j, u);
            table[i][j] = table[j][i] = it->second;
        }
    if (labels.empty()) {
        labels.reserve(n);
        for (auto mask : family)
            labels.push_back(set_label(mask));
    }
    return Semilattice::validate(table, std::move(labels));
}

} // namespace semicong
