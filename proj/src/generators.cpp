#include "semicong/generators.hpp"

#include <algorithm>
#include <set>

#include "semicong/splitmix.hpp"

namespace semicong {

namespace {

std::int64_t param(const GenSpec& spec, const std::string& key, std::int64_t lo, std::int64_t hi) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw InvalidInput(std::string("InvalidParams: ") + to_string(spec.kind) + " requires \"" + key + "\"");
    if (it->second < lo)
        throw InvalidInput("InvalidParams: " + key + " = " + std::to_string(it->second) + " must be >= " +
                           std::to_string(lo));
    if (it->second > hi)
        throw SizeCapExceeded(static_cast<std::size_t>(it->second), static_cast<std::size_t>(hi));
    return it->second;
}

Semilattice powerset_sublattice(std::int64_t k, bool with_empty) {
    std::vector<std::uint64_t> family;
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t mask = with_empty ? 0 : 1; mask < count; ++mask)
        family.push_back(mask);
    return from_union_closed(family);
}

std::uint64_t low_bits(std::int64_t k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

} // namespace

const char* to_string(GenKind kind) {
    switch (kind) {
    case GenKind::Chain: return "chain";
    case GenKind::FreeJoin: return "free_join";
    case GenKind::Boolean: return "boolean";
    case GenKind::Fan: return "fan";
    case GenKind::RandomUnionClosed: return "random_union_closed";
    }
    return "?";
}

GenKind parse_gen_kind(const std::string& name) {
    for (auto k : {GenKind::Chain, GenKind::FreeJoin, GenKind::Boolean, GenKind::Fan, GenKind::RandomUnionClosed})
        if (name == to_string(k))
            return k;
    throw InvalidInput("InvalidParams: unknown generator kind \"" + name + "\"");
}

GenSpec GenSpec::chain(std::int64_t n) { return {GenKind::Chain, {{"n", n}}, 0}; }
GenSpec GenSpec::free_join(std::int64_t k) { return {GenKind::FreeJoin, {{"k", k}}, 0}; }
GenSpec GenSpec::boolean(std::int64_t k) { return {GenKind::Boolean, {{"k", k}}, 0}; }
GenSpec GenSpec::fan(std::int64_t k) { return {GenKind::Fan, {{"k", k}}, 0}; }
GenSpec GenSpec::random_union_closed(std::int64_t k, std::int64_t m, std::uint64_t seed) {
    return {GenKind::RandomUnionClosed, {{"k", k}, {"m", m}}, seed};
}

std::string GenSpec::name() const {
    std::string out = to_string(kind);
    out += '(';
    bool first = true;
    for (const auto& [key, value] : params) {
        out += (first ? "" : ",") + key + "=" + std::to_string(value);
        first = false;
    }
    if (kind == GenKind::RandomUnionClosed)
        out += ",seed=" + std::to_string(seed);
    out += ')';
    return out;
}

Semilattice generate(const GenSpec& spec) {
    switch (spec.kind) {
    case GenKind::Chain: {
        const auto n = static_cast<std::size_t>(param(spec, "n", 1, kMaxElements));
        std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                table[x][y] = std::max(x, y);
        return Semilattice::validate(table);
    }
    case GenKind::FreeJoin:
        return powerset_sublattice(param(spec, "k", 1, 6), false);
    case GenKind::Boolean:
        return powerset_sublattice(param(spec, "k", 0, 6), true);
    case GenKind::Fan: {
        const auto k = static_cast<std::size_t>(param(spec, "k", 1, kMaxElements - 1));
        std::vector<std::vector<Element>> table(k + 1, std::vector<Element>(k + 1, k));
        for (Element x = 0; x < k; ++x)
            table[x][x] = x;
        return Semilattice::validate(table);
    }
    case GenKind::RandomUnionClosed: {
        const auto k = param(spec, "k", 1, 64);
        const auto m = param(spec, "m", 1, kMaxElements);
        SplitMix64 rng(spec.seed);
        for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
            std::set<std::uint64_t> family;
            for (std::int64_t i = 0; i < m; ++i)
                family.insert(rng.next() & low_bits(k));
            // Union closure to fixpoint; stop early once over the cap.
            bool grew = true;
            while (grew && family.size() <= kMaxElements) {
                grew = false;
                const std::vector<std::uint64_t> snapshot(family.begin(), family.end());
                for (std::size_t i = 0; i < snapshot.size(); ++i)
                    for (std::size_t j = i + 1; j < snapshot.size(); ++j)
                        grew |= family.insert(snapshot[i] | snapshot[j]).second;
            }
            if (family.size() <= kMaxElements) {
                const std::vector<std::uint64_t> sorted(family.begin(), family.end());
                return from_union_closed(sorted);
            }
        }
        throw SizeCapExceeded(kMaxElements + 1, kMaxElements);
    }
    }
    throw InvalidInput("InvalidParams: unknown generator kind");
}

std::vector<CorpusEntry> desk_corpus() {
    std::vector<GenSpec> specs;
    for (int n = 1; n <= 6; ++n)
        specs.push_back(GenSpec::chain(n));
    for (int k = 1; k <= 3; ++k)
        specs.push_back(GenSpec::free_join(k));
    for (int k = 1; k <= 3; ++k)
        specs.push_back(GenSpec::boolean(k));
    for (int k = 1; k <= 4; ++k)
        specs.push_back(GenSpec::fan(k));
    for (int i = 0; i < 20; ++i)
        specs.push_back(GenSpec::random_union_closed(3 + i % 2, 2 + i % 4, 1000 + static_cast<std::uint64_t>(i)));

    std::vector<CorpusEntry> corpus;
    corpus.reserve(specs.size());
    for (auto& spec : specs) {
        auto algebra = generate(spec);
        corpus.push_back({spec.name(), std::move(spec), std::move(algebra)});
    }
    return corpus;
}

std::vector<CorpusEntry> restrict_size(const std::vector<CorpusEntry>& corpus, std::size_t max_n) {
    std::vector<CorpusEntry> out;
    for (const auto& e : corpus)
        if (e.algebra.size() <= max_n)
            out.push_back(e);
    return out;
}

} // namespace semicong
