#include "semicong/lattice.hpp"

#include <algorithm>
#include <set>

namespace semicong {

namespace {

std::uint64_t all_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool has(std::uint64_t mask, Element x) {
    return (mask >> x) & 1u;
}

void require_carrier(const Semilattice& s, const Congruence& c) {
    if (c.carrier() != s.fingerprint() || c.size() != s.size())
        throw MismatchedCarrier();
}

// Restricted growth strings of length n, each checked for compatibility.
void bell_filter(const Semilattice& s, std::vector<Congruence>& out) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> ids(n, 0);
    std::vector<std::uint32_t> prefix_max(n, 0);
    for (;;) {
        auto p = Partition::from_block_ids(ids);
        if (is_congruence(s, p))
            out.push_back(Congruence::certify(s, std::move(p)));
        // Advance to the next restricted growth string.
        std::size_t i = n;
        while (i-- > 1) {
            if (ids[i] <= prefix_max[i - 1]) {
                ++ids[i];
                break;
            }
        }
        if (i == 0 || i >= n)
            return;
        prefix_max[i] = std::max(prefix_max[i - 1], ids[i]);
        for (std::size_t k = i + 1; k < n; ++k) {
            ids[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
}

void meet_closure(const Semilattice& s, std::vector<Congruence>& out) {
    // Every congruence is a meet of maximal congruences, so closing under
    // meets with each generator in turn reaches the whole lattice.
    std::set<Congruence> seen{Congruence::full(s)};
    for (const auto& m : maximal_congruences(s)) {
        std::vector<Congruence> fresh;
        for (const auto& c : seen) {
            auto x = meet(c, m);
            if (!seen.contains(x))
                fresh.push_back(std::move(x));
        }
        seen.insert(fresh.begin(), fresh.end());
    }
    out.assign(seen.begin(), seen.end());
}

} // namespace

Partition MaximalCut::partition(std::size_t n) const {
    std::vector<std::uint32_t> ids(n);
    for (Element x = 0; x < n; ++x)
        ids[x] = has(beta, x) ? 1 : 0;
    return Partition::from_block_ids(ids);
}

bool is_maximal_cut(const Semilattice& s, std::uint64_t beta) {
    const std::size_t n = s.size();
    const std::uint64_t alpha = all_bits(n) & ~beta;
    if (beta == 0 || alpha == 0 || (beta & ~all_bits(n)) != 0)
        return false;
    for (Element b = 0; b < n; ++b) {
        if (!has(beta, b))
            continue;
        for (Element x = 0; x < n; ++x)
            if (!has(beta, s.op(b, x)))
                return false;
    }
    for (Element a = 0; a < n; ++a) {
        if (!has(alpha, a))
            continue;
        for (Element a2 = a + 1; a2 < n; ++a2)
            if (has(alpha, a2) && !has(alpha, s.op(a, a2)))
                return false;
    }
    return true;
}

std::vector<MaximalCut> maximal_cuts(const Semilattice& s) {
    const std::size_t n = s.size();
    if (n > kMaxCutScan)
        throw SizeCapExceeded(n, kMaxCutScan);
    std::vector<MaximalCut> out;
    const std::uint64_t universe = all_bits(n);
    for (std::uint64_t beta = 1; beta < universe; ++beta) {
        // The top is absorbing, so it lies in every upper class.
        if (!has(beta, s.top()))
            continue;
        if (is_maximal_cut(s, beta))
            out.push_back({beta, universe & ~beta});
    }
    return out;
}

std::vector<Congruence> maximal_congruences(const Semilattice& s) {
    std::vector<Congruence> out;
    for (const auto& cut : maximal_cuts(s)) {
        // Two blocks, so the only coarser partition is ∇.
        auto c = Congruence::certify(s, cut.partition(s.size()));
        if (c.block_count() != 2)
            throw DecompositionMismatch("maximal cut " + c.to_string() + " does not have two classes");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Congruence> papert_decomposition(const Semilattice& s, const Congruence& theta) {
    require_carrier(s, theta);
    std::vector<Congruence> out;
    for (auto& m : maximal_congruences(s))
        if (contained_in(theta, m))
            out.push_back(std::move(m));
    if (meet_all(s, out) != theta)
        throw DecompositionMismatch("maximal congruences above " + theta.to_string() +
                                    " meet to " + meet_all(s, out).to_string());
    return out;
}

std::vector<Congruence> all_congruences(const Semilattice& s, EnumerationStrategy strategy,
                                        std::size_t bell_cap) {
    if (strategy == EnumerationStrategy::Auto)
        strategy = s.size() <= bell_cap ? EnumerationStrategy::BellFilter : EnumerationStrategy::MeetClosure;
    std::vector<Congruence> out;
    if (strategy == EnumerationStrategy::BellFilter) {
        if (s.size() > bell_cap)
            throw SizeCapExceeded(s.size(), bell_cap);
        bell_filter(s, out);
    } else {
        meet_closure(s, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FamilySplit classify_family(const Semilattice& s, std::span<const Congruence> family,
                            const ComparablePair& g) {
    FamilySplit split;
    for (const auto& c : family) {
        require_carrier(s, c);
        (contains_generator(c, g) ? split.phis : split.psis).push_back(c);
    }
    return split;
}

} // namespace semicong
