#include "semicong/identities.hpp"

#include "semicong/splitmix.hpp"

namespace semicong {

namespace {

std::vector<Partition> partitions_of(std::span<const Congruence> family) {
    std::vector<Partition> out;
    out.reserve(family.size());
    for (const auto& c : family)
        out.push_back(c.partition());
    return out;
}

void require_carrier(const Semilattice& s, std::span<const Congruence> family) {
    for (const auto& c : family)
        if (c.carrier() != s.fingerprint() || c.size() != s.size())
            throw MismatchedCarrier();
}

enum class Membership { Contains, Avoids };

void require_split(std::span<const Congruence> family, const char* name, const ComparablePair& g,
                   Membership want, bool maximal) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        const bool in = contains_generator(family[i], g);
        if (want == Membership::Contains && !in)
            throw HypothesisViolation(name, i, "does not contain (t⊙s, s)");
        if (want == Membership::Avoids && in)
            throw HypothesisViolation(name, i, "contains (t⊙s, s)");
        if (maximal && family[i].block_count() != 2)
            throw HypothesisViolation(name, i, "is not a maximal congruence");
    }
}

IdentityReport make_report(Identity id, IdentityInput input, Congruence lhs, Congruence rhs) {
    const bool holds = lhs == rhs;
    auto witness = holds ? std::nullopt : distinguishing_pair(lhs, rhs);
    return IdentityReport{id, std::move(input), std::move(lhs), std::move(rhs), holds, witness, std::nullopt};
}

IdentityInput input_for(const Semilattice& s, const ComparablePair& g) {
    IdentityInput in;
    in.fingerprint = s.fingerprint();
    in.t = g.t();
    in.s = g.s();
    return in;
}

} // namespace

const char* to_string(Identity id) {
    switch (id) {
    case Identity::MaximalCrossing: return "maximal_crossing";
    case Identity::OnePsi: return "one_psi";
    case Identity::GeneralizedCrossing: return "generalized_crossing";
    case Identity::PsiJoinFull: return "psi_join_full";
    case Identity::PwdLaw: return "pwd_law";
    case Identity::NaivePwd: return "naive_pwd";
    }
    return "?";
}

std::optional<ElementPair> distinguishing_pair(const Congruence& a, const Congruence& b) {
    for (Element p = 0; p < a.size(); ++p)
        for (Element q = p + 1; q < a.size(); ++q)
            if (a.contains(p, q) != b.contains(p, q))
                return ElementPair{p, q};
    return std::nullopt;
}

IdentityReport check_maximal_crossing(const Semilattice& s, std::span<const Congruence> phis,
                                      std::span<const Congruence> psis, const ComparablePair& g) {
    if (phis.empty())
        throw EmptyFamily("phis");
    if (psis.empty())
        throw EmptyFamily("psis");
    require_carrier(s, phis);
    require_carrier(s, psis);
    require_split(phis, "phis", g, Membership::Contains, true);
    require_split(psis, "psis", g, Membership::Avoids, true);

    const auto theta = principal_comparable_formula(s, g);
    auto lhs = join(meet(meet_all(s, phis), meet_all(s, psis)), theta);
    auto rhs = Congruence::full(s);
    for (const auto& phi : phis)
        for (const auto& psi : psis)
            rhs = meet(rhs, join(meet(phi, psi), theta));

    auto in = input_for(s, g);
    in.phis = partitions_of(phis);
    in.psis = partitions_of(psis);
    return make_report(Identity::MaximalCrossing, std::move(in), std::move(lhs), std::move(rhs));
}

IdentityReport check_one_psi(const Semilattice& s, std::span<const Congruence> phis, const Congruence& psi,
                             const ComparablePair& g) {
    if (phis.empty())
        throw EmptyFamily("phis");
    require_carrier(s, phis);
    require_carrier(s, std::span(&psi, 1));
    require_split(phis, "phis", g, Membership::Contains, false);
    require_split(std::span(&psi, 1), "psi", g, Membership::Avoids, false);

    const auto theta = principal_comparable_formula(s, g);
    auto lhs = join(meet(meet_all(s, phis), psi), theta);
    auto rhs = Congruence::full(s);
    for (const auto& phi : phis)
        rhs = meet(rhs, join(meet(phi, psi), theta));

    auto in = input_for(s, g);
    in.phis = partitions_of(phis);
    in.psis = {psi.partition()};
    return make_report(Identity::OnePsi, std::move(in), std::move(lhs), std::move(rhs));
}

IdentityReport check_generalized_crossing(const Semilattice& s, std::span<const Congruence> phis,
                                          std::span<const Congruence> psis, const ComparablePair& g) {
    if (psis.empty())
        throw EmptyFamily("psis");
    // Both index sets of the right side would be empty, leaving Ψ ∨ Θ = ∇,
    // which is false in general (B2, Ψ = Δ, t = a, s = 0).
    if (phis.empty() && psis.size() == 1)
        throw HypothesisViolation("phis", 0, "may only be empty when there are at least two psis");
    require_carrier(s, phis);
    require_carrier(s, psis);
    require_split(phis, "phis", g, Membership::Contains, false);
    require_split(psis, "psis", g, Membership::Avoids, false);

    const auto theta = principal_comparable_formula(s, g);
    auto lhs = join(meet(meet_all(s, phis), meet_all(s, psis)), theta);
    auto cross = Congruence::full(s);
    for (const auto& phi : phis)
        for (const auto& psi : psis)
            cross = meet(cross, join(meet(phi, psi), theta));
    auto psi_pairs = Congruence::full(s);
    for (std::size_t j = 0; j < psis.size(); ++j)
        for (std::size_t j2 = 0; j2 < psis.size(); ++j2)
            if (j2 != j)
                psi_pairs = meet(psi_pairs, join(meet(psis[j2], psis[j]), theta));
    auto rhs = meet(cross, psi_pairs);

    auto in = input_for(s, g);
    in.phis = partitions_of(phis);
    in.psis = partitions_of(psis);
    return make_report(Identity::GeneralizedCrossing, std::move(in), std::move(lhs), std::move(rhs));
}

IdentityReport check_psi_join_full(const Semilattice& s, std::span<const Congruence> psis,
                                   const ComparablePair& g) {
    if (psis.empty())
        throw EmptyFamily("psis");
    require_carrier(s, psis);
    require_split(psis, "psis", g, Membership::Avoids, true);

    auto lhs = join(meet_all(s, psis), principal_comparable_formula(s, g));
    auto in = input_for(s, g);
    in.psis = partitions_of(psis);
    return make_report(Identity::PsiJoinFull, std::move(in), std::move(lhs), Congruence::full(s));
}

IdentityReport check_pwd_law(const Semilattice& s, std::span<const Congruence> omegas, const ComparablePair& g) {
    if (omegas.empty())
        throw EmptyFamily("omegas");
    require_carrier(s, omegas);

    const auto theta = principal_comparable_formula(s, g);
    auto lhs = join(meet_all(s, omegas), theta);
    auto rhs = Congruence::full(s);
    auto off_diagonal = Congruence::full(s);
    for (std::size_t k = 0; k < omegas.size(); ++k)
        for (std::size_t r = 0; r < omegas.size(); ++r) {
            auto term = join(meet(omegas[k], omegas[r]), theta);
            if (k != r)
                off_diagonal = meet(off_diagonal, term);
            rhs = meet(rhs, term);
        }

    auto in = input_for(s, g);
    in.omegas = partitions_of(omegas);
    const bool changes = off_diagonal != rhs;
    auto report = make_report(Identity::PwdLaw, std::move(in), std::move(lhs), std::move(rhs));
    report.diagonal_changes_rhs = changes;
    return report;
}

IdentityReport check_naive_pwd(const Semilattice& s, std::span<const Congruence> omegas, const Congruence& theta) {
    if (omegas.empty())
        throw EmptyFamily("omegas");
    require_carrier(s, omegas);
    require_carrier(s, std::span(&theta, 1));

    auto lhs = join(meet_all(s, omegas), theta);
    auto rhs = Congruence::full(s);
    for (std::size_t k = 0; k < omegas.size(); ++k)
        for (std::size_t r = 0; r < omegas.size(); ++r)
            rhs = meet(rhs, join(meet(omegas[k], omegas[r]), theta));

    IdentityInput in;
    in.fingerprint = s.fingerprint();
    in.omegas = partitions_of(omegas);
    in.theta = theta.partition();
    return make_report(Identity::NaivePwd, std::move(in), std::move(lhs), std::move(rhs));
}

void for_each_multiset(std::size_t count, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(std::span<const std::size_t>)>& visit) {
    std::vector<std::size_t> idx;
    if (min_size == 0 && !visit(idx))
        return;
    if (count == 0)
        return;
    for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= max_size; ++size) {
        idx.assign(size, 0);
        for (;;) {
            if (!visit(idx))
                return;
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == count - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t k = i; k < size; ++k)
                idx[k] = idx[i - 1];
        }
    }
}

namespace {

struct TraceHash {
    std::uint64_t h = 0xcbf29ce484222325ull;
    void mix(std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    }
};

// Evaluates one naive instance and folds it into the result. Returns false
// when the search should stop.
bool record_trial(NaiveSearchResult& result, TraceHash& trace, const Semilattice& s, std::size_t pool_index,
                  std::vector<Congruence> omegas, const Congruence& theta, bool stop_at_first) {
    auto report = check_naive_pwd(s, omegas, theta);
    ++result.trials;
    trace.mix(s.fingerprint());
    for (std::uint32_t id : report.lhs.partition().block_ids())
        trace.mix(id);
    for (std::uint32_t id : report.rhs.partition().block_ids())
        trace.mix(id);
    trace.mix(report.holds);
    auto instance = [&] {
        return NaiveInstance{pool_index, omegas, theta, report.lhs, report.rhs};
    };
    if (!contained_in(report.lhs, report.rhs) && !result.containment_violation)
        result.containment_violation = instance();
    if (!report.holds) {
        ++result.counterexamples;
        if (!result.counterexample)
            result.counterexample = instance();
        if (stop_at_first)
            return false;
    }
    return true;
}

} // namespace

NaiveSearchResult search_naive_pwd_counterexample(std::span<const Semilattice> pool,
                                                  const NaiveSearchOptions& options) {
    NaiveSearchResult result;
    TraceHash trace;
    if (pool.empty() || options.max_family_size == 0) {
        result.trace_digest = trace.h;
        return result;
    }
    std::vector<std::optional<std::vector<Congruence>>> cache(pool.size());
    SplitMix64 rng(options.seed);
    for (std::size_t trial = 0; trial < options.budget; ++trial) {
        const std::size_t pick = rng.below(pool.size());
        if (!cache[pick])
            cache[pick] = all_congruences(pool[pick]);
        const auto& congs = *cache[pick];
        const std::size_t size = 1 + rng.below(options.max_family_size);
        std::vector<Congruence> omegas;
        omegas.reserve(size);
        trace.mix(pick);
        for (std::size_t k = 0; k < size; ++k) {
            const auto m = rng.below(congs.size());
            trace.mix(m);
            omegas.push_back(congs[m]);
        }
        const auto t = rng.below(congs.size());
        trace.mix(t);
        if (!record_trial(result, trace, pool[pick], pick, std::move(omegas), congs[t], options.stop_at_first))
            break;
    }
    result.trace_digest = trace.h;
    return result;
}

NaiveSearchResult exhaustive_naive_pwd_search(std::span<const Semilattice> pool, std::size_t max_family_size,
                                              bool stop_at_first) {
    NaiveSearchResult result;
    TraceHash trace;
    bool running = true;
    for (std::size_t p = 0; p < pool.size() && running; ++p) {
        const auto congs = all_congruences(pool[p]);
        for_each_multiset(congs.size(), 1, max_family_size, [&](std::span<const std::size_t> idx) {
            std::vector<Congruence> omegas;
            for (auto i : idx)
                omegas.push_back(congs[i]);
            for (const auto& theta : congs) {
                running = record_trial(result, trace, pool[p], p, omegas, theta, stop_at_first);
                if (!running)
                    return false;
            }
            return true;
        });
    }
    result.trace_digest = trace.h;
    return result;
}

} // namespace semicong
