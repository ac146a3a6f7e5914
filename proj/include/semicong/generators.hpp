#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semicong/semilattice.hpp"

namespace semicong {

enum class GenKind { Chain, FreeJoin, Boolean, Fan, RandomUnionClosed };

const char* to_string(GenKind kind);
GenKind parse_gen_kind(const std::string& name);

/// Recipe for a generated semilattice.
///   chain{n}                   0 < 1 < ... < n-1, join = max
///   free_join{k}               nonempty subsets of a k-set under union
///   boolean{k}                 all subsets of a k-set under union
///   fan{k}                     k pairwise incomparable atoms and a top
///   random_union_closed{k, m}  m random subsets of a k-set, union-closed
struct GenSpec {
    GenKind kind = GenKind::Chain;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;

    static GenSpec chain(std::int64_t n);
    static GenSpec free_join(std::int64_t k);
    static GenSpec boolean(std::int64_t k);
    static GenSpec fan(std::int64_t k);
    static GenSpec random_union_closed(std::int64_t k, std::int64_t m, std::uint64_t seed);

    std::string name() const;
};

/// Maximum number of draws for a random family whose closure exceeds the cap.
inline constexpr int kRandomAttempts = 16;

/// Throws InvalidInput for bad parameters and SizeCapExceeded when the
/// result would not fit in kMaxElements.
Semilattice generate(const GenSpec& spec);

struct CorpusEntry {
    std::string name;
    GenSpec spec;
    Semilattice algebra;
};

/// All chains n <= 6, free_join and boolean for k <= 3, fan for k <= 4, and
/// 20 seeded random union-closed families.
std::vector<CorpusEntry> desk_corpus();

/// Entries of `corpus` with at most max_n elements, in order.
std::vector<CorpusEntry> restrict_size(const std::vector<CorpusEntry>& corpus, std::size_t max_n);

} // namespace semicong
