#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicong/error.hpp"

namespace semicong {

/// Element of a semilattice, as a dense index into its join table.
using Element = std::size_t;

/// Hard cap on the number of elements (bitmask representations use 64 bits).
inline constexpr std::size_t kMaxElements = 64;

/// How `leq` reads the table. The algebra is the same either way; a meet
/// table is stored as-is and only the order is read in reverse.
enum class Orientation { Join, Meet };

/// A finite semilattice given by its operation table. Immutable once built;
/// the only way to obtain one is through `validate` (or a helper that calls it).
class Semilattice {
public:
    /// Checks the four axioms (range, idempotency, commutativity,
    /// associativity, in that order) and throws AxiomViolation carrying the
    /// first witness found in lexicographic scan order.
    static Semilattice validate(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> labels = {},
                                Orientation orientation = Orientation::Join);

    /// Same scan as `validate` without throwing.
    static std::optional<AxiomViolation>
    find_axiom_violation(const std::vector<std::vector<Element>>& table);

    std::size_t size() const noexcept { return n_; }

    Element join(Element x, Element y) const;
    Element op(Element x, Element y) const noexcept { return table_[x * n_ + y]; }

    /// Order in the semilattice's stated orientation.
    bool leq(Element x, Element y) const;

    /// Order induced by the stored operation: x below y iff x op y = y.
    /// All congruence algorithms work with this reading.
    bool below(Element x, Element y) const noexcept { return op(x, y) == y; }

    Orientation orientation() const noexcept { return orientation_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(Element x) const;

    /// Stable FNV-1a hash of the operation table; identifies the carrier.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    std::vector<std::vector<Element>> table() const;

    /// Absorbing element of the stored operation (the join of all elements).
    Element top() const noexcept { return top_; }

    void check_element(Element x) const;

    friend bool operator==(const Semilattice& a, const Semilattice& b) {
        return a.n_ == b.n_ && a.table_ == b.table_ && a.orientation_ == b.orientation_;
    }

private:
    Semilattice() = default;

    std::size_t n_ = 0;
    std::vector<std::uint8_t> table_;
    std::vector<std::string> labels_;
    Orientation orientation_ = Orientation::Join;
    std::uint64_t fingerprint_ = 0;
    Element top_ = 0;
};

/// Builds the semilattice of a union-closed family of subsets of a ground
/// set of at most 64 points. Element i is family[i]; join is union.
Semilattice from_union_closed(std::span<const std::uint64_t> family,
                              std::vector<std::string> labels = {});

/// "{0,2}"-style rendering of a bit-set.
std::string set_label(std::uint64_t mask);

} // namespace semicong
