#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semicong/partition.hpp"
#include "semicong/semilattice.hpp"

namespace semicong {

class Congruence;

namespace detail {
Congruence make_congruence(Partition p, std::uint64_t carrier);
}

/// A partition certified compatible with the operation of one semilattice.
/// Carries the semilattice's fingerprint so that operations mixing carriers
/// are rejected.
class Congruence {
public:
    /// Throws InvalidInput when `p` is not compatible with `s`.
    static Congruence certify(const Semilattice& s, Partition p);
    static Congruence diagonal(const Semilattice& s);
    static Congruence full(const Semilattice& s);

    const Partition& partition() const noexcept { return partition_; }
    std::uint64_t carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return partition_.size(); }
    std::size_t block_count() const noexcept { return partition_.block_count(); }
    bool contains(Element a, Element b) const { return partition_.related(a, b); }
    bool is_diagonal() const noexcept { return partition_.block_count() == partition_.size(); }
    bool is_full() const noexcept { return partition_.block_count() <= 1; }
    std::string to_string() const { return partition_.to_string(); }

    friend bool operator==(const Congruence&, const Congruence&) = default;
    friend auto operator<=>(const Congruence& a, const Congruence& b) {
        return a.partition_ <=> b.partition_;
    }

private:
    Congruence(Partition p, std::uint64_t carrier) : partition_(std::move(p)), carrier_(carrier) {}
    friend Congruence detail::make_congruence(Partition, std::uint64_t);

    Partition partition_;
    std::uint64_t carrier_;
};

/// The pair (t, s) whose principal congruence identifies t⊙s with s.
class ComparablePair {
public:
    ComparablePair(const Semilattice& s, Element t, Element s_elem);

    Element t() const noexcept { return t_; }
    Element s() const noexcept { return s_; }
    /// t⊙s, which always sits above s.
    Element generator_top() const noexcept { return top_; }
    /// True when t is below s, in which case the congruence is trivial.
    bool degenerate() const noexcept { return top_ == s_; }

private:
    Element t_;
    Element s_;
    Element top_;
};

using ElementPair = std::pair<Element, Element>;

/// First (a, b, c) with a~b but a⊙c and b⊙c in different blocks.
std::optional<std::array<Element, 3>> find_compatibility_violation(const Semilattice& s,
                                                                    const Partition& p);

/// Throws InvalidInput on length mismatch.
bool is_congruence(const Semilattice& s, const Partition& p);

/// Least congruence containing every seed pair. Union-find seeded with the
/// pairs; each effective merge (a,b) enqueues (a⊙c, b⊙c) for all c.
Congruence congruence_closure(const Semilattice& s, std::span<const ElementPair> pairs);

/// Θ(t⊙s, s) computed by closing the single generating pair.
Congruence principal_closure(const Semilattice& s, const ComparablePair& g);

/// Θ(t⊙s, s) in closed form: elements a with s ≤ a are grouped by t⊙a, all
/// other elements stay singletons.
Congruence principal_comparable_formula(const Semilattice& s, const ComparablePair& g);

Congruence meet(const Congruence& a, const Congruence& b);
/// Transitive closure of the union of the two relations.
Congruence join(const Congruence& a, const Congruence& b);

/// Meet of a family; the empty meet is ∇ of `s`.
Congruence meet_all(const Semilattice& s, std::span<const Congruence> family);

/// a ⊆ b as relations.
bool contained_in(const Congruence& a, const Congruence& b);

/// Whether u ≤ v holds in S/Θ(t⊙s, s), decided without building the
/// quotient: true if u ≤ v already, otherwise u ≤ v⊙t and s ≤ v. Read in
/// the semilattice's orientation.
bool quotient_leq_formula(const Semilattice& s, const ComparablePair& g, Element u, Element v);

struct Quotient {
    Semilattice algebra;
    /// Original element -> quotient element (its block index).
    std::vector<Element> projection;
};

/// Blocks become elements, numbered by smallest member.
Quotient quotient(const Semilattice& s, const Congruence& theta);

} // namespace semicong
