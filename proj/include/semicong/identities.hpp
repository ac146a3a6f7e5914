#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicong/congruence.hpp"
#include "semicong/lattice.hpp"

namespace semicong {

enum class Identity { MaximalCrossing, OnePsi, GeneralizedCrossing, PsiJoinFull, PwdLaw, NaivePwd };

const char* to_string(Identity id);

/// What an identity was evaluated on.
struct IdentityInput {
    std::uint64_t fingerprint = 0;
    std::optional<Element> t;
    std::optional<Element> s;
    std::vector<Partition> phis;
    std::vector<Partition> psis;
    std::vector<Partition> omegas;
    std::optional<Partition> theta; ///< naive variant only
};

struct IdentityReport {
    Identity identity;
    IdentityInput input;
    Congruence lhs;
    Congruence rhs;
    bool holds;
    /// A pair related by exactly one side; present iff !holds.
    std::optional<ElementPair> witness;
    /// PWD law only: whether dropping the k = r terms changes the right side.
    std::optional<bool> diagonal_changes_rhs;
};

/// First pair (p, q), p < q, related by exactly one of a, b.
std::optional<ElementPair> distinguishing_pair(const Congruence& a, const Congruence& b);

/// (∩φ ∩ ∩ψ) ∨ Θ = ∩_{i,j} ((φᵢ ∩ ψⱼ) ∨ Θ) for maximal φ containing and
/// maximal ψ avoiding the generating pair.
IdentityReport check_maximal_crossing(const Semilattice& s, std::span<const Congruence> phis,
                                      std::span<const Congruence> psis, const ComparablePair& g);

/// (∩Φ ∩ Ψ) ∨ Θ = ∩ᵢ ((Φᵢ ∩ Ψ) ∨ Θ) for arbitrary congruences.
IdentityReport check_one_psi(const Semilattice& s, std::span<const Congruence> phis, const Congruence& psi,
                             const ComparablePair& g);

/// Arbitrary-congruence crossing: the right side additionally meets the
/// (Ψⱼ′ ∩ Ψⱼ) ∨ Θ terms for every ordered j ≠ j′. phis may be empty only
/// when there are at least two psis.
IdentityReport check_generalized_crossing(const Semilattice& s, std::span<const Congruence> phis,
                                          std::span<const Congruence> psis, const ComparablePair& g);

/// (∩ψ) ∨ Θ = ∇ for maximal ψ avoiding the generating pair.
IdentityReport check_psi_join_full(const Semilattice& s, std::span<const Congruence> psis,
                                   const ComparablePair& g);

/// (∩Ω) ∨ Θ = ∩_{k,r} ((Ω_k ∩ Ω_r) ∨ Θ) over all ordered pairs, k = r included.
IdentityReport check_pwd_law(const Semilattice& s, std::span<const Congruence> omegas, const ComparablePair& g);

/// The PWD shape with theta in place of Θ. Not an identity in general;
/// only lhs ⊆ rhs is guaranteed.
IdentityReport check_naive_pwd(const Semilattice& s, std::span<const Congruence> omegas, const Congruence& theta);

/// Calls `visit` with every non-decreasing index sequence of length
/// min_size..max_size over {0..count-1}, i.e. every multiset (min_size 0
/// includes the empty one). Stops early when `visit` returns false.
void for_each_multiset(std::size_t count, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(std::span<const std::size_t>)>& visit);

struct NaiveInstance {
    std::size_t pool_index;
    std::vector<Congruence> omegas;
    Congruence theta;
    Congruence lhs;
    Congruence rhs;
};

struct NaiveSearchOptions {
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    std::size_t max_family_size = 3;
    bool stop_at_first = true;
};

struct NaiveSearchResult {
    std::size_t trials = 0;
    std::size_t counterexamples = 0;
    std::optional<NaiveInstance> counterexample;
    /// An instance where lhs ⊄ rhs; this cannot happen in a correct engine.
    std::optional<NaiveInstance> containment_violation;
    /// Hash over every sampled instance and verdict, for reproducibility checks.
    std::uint64_t trace_digest = 0;
};

/// Samples (S, family, θ) from the pool with splitmix64 seeded by `seed`:
/// S uniformly, family size uniformly in 1..max_family_size, members and θ
/// uniformly (with replacement) from all_congruences(S).
NaiveSearchResult search_naive_pwd_counterexample(std::span<const Semilattice> pool,
                                                  const NaiveSearchOptions& options);

/// Every S in the pool, every multiset family of size 1..max_family_size,
/// every θ.
NaiveSearchResult exhaustive_naive_pwd_search(std::span<const Semilattice> pool, std::size_t max_family_size,
                                              bool stop_at_first = true);

} // namespace semicong
