#include "semicong/congruence.hpp"

#include <deque>
#include <unordered_map>

#include "semicong/union_find.hpp"

namespace semicong {

namespace detail {
Congruence make_congruence(Partition p, std::uint64_t carrier) {
    return Congruence(std::move(p), carrier);
}
} // namespace detail

namespace {

void require_same_carrier(const Congruence& a, const Congruence& b) {
    if (a.carrier() != b.carrier() || a.size() != b.size())
        throw MismatchedCarrier();
}

void require_carrier(const Semilattice& s, const Congruence& c) {
    if (c.carrier() != s.fingerprint() || c.size() != s.size())
        throw MismatchedCarrier();
}

} // namespace

Congruence Congruence::certify(const Semilattice& s, Partition p) {
    if (auto w = find_compatibility_violation(s, p))
        throw InvalidInput("partition " + p.to_string() + " is not a congruence: " +
                           std::to_string((*w)[0]) + "~" + std::to_string((*w)[1]) + " but joins with " +
                           std::to_string((*w)[2]) + " differ");
    return Congruence(std::move(p), s.fingerprint());
}

Congruence Congruence::diagonal(const Semilattice& s) {
    return Congruence(Partition::diagonal(s.size()), s.fingerprint());
}

Congruence Congruence::full(const Semilattice& s) {
    return Congruence(Partition::full(s.size()), s.fingerprint());
}

ComparablePair::ComparablePair(const Semilattice& s, Element t, Element s_elem)
    : t_(t), s_(s_elem), top_(s.join(t, s_elem)) {}

std::optional<std::array<Element, 3>> find_compatibility_violation(const Semilattice& s,
                                                                    const Partition& p) {
    const std::size_t n = s.size();
    if (p.size() != n)
        throw InvalidInput("partition has " + std::to_string(p.size()) + " elements, semilattice has " +
                           std::to_string(n));
    const auto& id = p.block_ids();
    // Comparing each element with the first member of its block is enough:
    // the relation is an equivalence and the operation is commutative.
    std::vector<Element> first(p.block_count(), n);
    for (Element a = 0; a < n; ++a) {
        Element& rep = first[id[a]];
        if (rep == n) {
            rep = a;
            continue;
        }
        for (Element c = 0; c < n; ++c)
            if (id[s.op(rep, c)] != id[s.op(a, c)])
                return std::array<Element, 3>{rep, a, c};
    }
    return std::nullopt;
}

bool is_congruence(const Semilattice& s, const Partition& p) {
    return !find_compatibility_violation(s, p).has_value();
}

Congruence congruence_closure(const Semilattice& s, std::span<const ElementPair> pairs) {
    const std::size_t n = s.size();
    UnionFind uf(n);
    std::deque<ElementPair> work;
    for (const auto& [a, b] : pairs) {
        s.check_element(a);
        s.check_element(b);
        work.emplace_back(a, b);
    }
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        if (!uf.merge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)))
            continue;
        if (uf.merges() + 1 == n) // everything merged
            break;
        for (Element c = 0; c < n; ++c)
            work.emplace_back(s.op(a, c), s.op(b, c));
    }
    return detail::make_congruence(uf.to_partition(), s.fingerprint());
}

Congruence principal_closure(const Semilattice& s, const ComparablePair& g) {
    const ElementPair seed{g.generator_top(), g.s()};
    return congruence_closure(s, std::span(&seed, 1));
}

Congruence principal_comparable_formula(const Semilattice& s, const ComparablePair& g) {
    if (g.degenerate())
        return Congruence::diagonal(s);
    const std::size_t n = s.size();
    // Singletons keep their own index as label; grouped elements use n + key.
    std::vector<std::uint32_t> label(n);
    for (Element a = 0; a < n; ++a)
        label[a] = static_cast<std::uint32_t>(s.below(g.s(), a) ? n + s.op(g.t(), a) : a);
    return detail::make_congruence(Partition::from_block_ids(label), s.fingerprint());
}

Congruence meet(const Congruence& a, const Congruence& b) {
    require_same_carrier(a, b);
    const std::size_t n = a.size();
    const auto& ia = a.partition().block_ids();
    const auto& ib = b.partition().block_ids();
    const std::uint32_t stride = static_cast<std::uint32_t>(b.block_count());
    std::vector<std::uint32_t> label(n);
    for (std::size_t x = 0; x < n; ++x)
        label[x] = ia[x] * stride + ib[x];
    return detail::make_congruence(Partition::from_block_ids(label), a.carrier());
}

Congruence join(const Congruence& a, const Congruence& b) {
    require_same_carrier(a, b);
    const std::size_t n = a.size();
    UnionFind uf(n);
    for (const auto* c : {&a, &b}) {
        std::vector<std::uint32_t> first(c->block_count(), static_cast<std::uint32_t>(n));
        const auto& id = c->partition().block_ids();
        for (std::uint32_t x = 0; x < n; ++x) {
            auto& rep = first[id[x]];
            if (rep == n)
                rep = x;
            else
                uf.merge(rep, x);
        }
    }
    return detail::make_congruence(uf.to_partition(), a.carrier());
}

Congruence meet_all(const Semilattice& s, std::span<const Congruence> family) {
    Congruence acc = Congruence::full(s);
    for (const auto& c : family) {
        require_carrier(s, c);
        acc = meet(acc, c);
    }
    return acc;
}

bool contained_in(const Congruence& a, const Congruence& b) {
    require_same_carrier(a, b);
    return a.partition().refines(b.partition());
}

bool quotient_leq_formula(const Semilattice& s, const ComparablePair& g, Element u, Element v) {
    s.check_element(u);
    s.check_element(v);
    if (s.orientation() == Orientation::Meet)
        std::swap(u, v);
    if (s.below(u, v))
        return true;
    return s.below(u, s.op(v, g.t())) && s.below(g.s(), v);
}

Quotient quotient(const Semilattice& s, const Congruence& theta) {
    require_carrier(s, theta);
    const auto& id = theta.partition().block_ids();
    const std::size_t m = theta.block_count();
    std::vector<Element> rep(m, s.size());
    for (Element x = 0; x < s.size(); ++x)
        if (rep[id[x]] == s.size())
            rep[id[x]] = x;
    std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = id[s.op(rep[i], rep[j])];
    std::vector<Element> projection(id.begin(), id.end());
    return Quotient{Semilattice::validate(table, {}, s.orientation()), std::move(projection)};
}

} // namespace semicong
