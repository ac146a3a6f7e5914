#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semicong/congruence.hpp"

namespace semicong {

/// Largest n for the 2^n scan over candidate upper classes.
inline constexpr std::size_t kMaxCutScan = 20;
/// Default largest n for enumerating all set partitions.
inline constexpr std::size_t kDefaultBellCap = 7;

/// Two-class congruence: `beta` is the upper (absorbing) class, `alpha` the
/// lower, join-closed one.
struct MaximalCut {
    std::uint64_t beta = 0;
    std::uint64_t alpha = 0;

    Partition partition(std::size_t n) const;
};

/// Checks the cut conditions for a candidate upper class.
bool is_maximal_cut(const Semilattice& s, std::uint64_t beta);

/// All maximal cuts, ordered by beta's bitmask value.
std::vector<MaximalCut> maximal_cuts(const Semilattice& s);

/// The congruences of `maximal_cuts`, in the same order.
std::vector<Congruence> maximal_congruences(const Semilattice& s);

/// Every maximal congruence containing theta. Their meet is theta; an empty
/// result means theta = ∇. Throws DecompositionMismatch if the meet differs.
std::vector<Congruence> papert_decomposition(const Semilattice& s, const Congruence& theta);

enum class EnumerationStrategy {
    Auto,        ///< BellFilter up to the Bell cap, MeetClosure above it
    BellFilter,  ///< all set partitions, filtered by compatibility
    MeetClosure, ///< {∇} and the maximal congruences closed under meet
};

/// All congruences in ascending canonical order.
std::vector<Congruence> all_congruences(const Semilattice& s,
                                        EnumerationStrategy strategy = EnumerationStrategy::Auto,
                                        std::size_t bell_cap = kDefaultBellCap);

struct FamilySplit {
    std::vector<Congruence> phis; ///< members containing (t⊙s, s)
    std::vector<Congruence> psis; ///< members not containing it
};

FamilySplit classify_family(const Semilattice& s, std::span<const Congruence> family,
                            const ComparablePair& g);

/// Whether (t⊙s, s) is related by c.
inline bool contains_generator(const Congruence& c, const ComparablePair& g) {
    return c.contains(g.generator_top(), g.s());
}

} // namespace semicong
