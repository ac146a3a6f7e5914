#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "semicong/generators.hpp"
#include "semicong/lattice.hpp"

using namespace semicong;

namespace {

std::vector<std::string> strings(const std::vector<Congruence>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs)
        out.push_back(c.to_string());
    return out;
}

} // namespace

TEST_CASE("maximal congruences of small semilattices") {
    const auto v = Semilattice::validate(oracle::v_table());
    CHECK(strings(maximal_congruences(v)) == std::vector<std::string>{"[[0,2],[1]]", "[[0],[1,2]]"});

    const auto b2 = Semilattice::validate(oracle::b2_table());
    const auto b2_max = strings(maximal_congruences(b2));
    CHECK(b2_max.size() == 3);
    for (const char* expected : {"[[0,2],[1,3]]", "[[0,1],[2,3]]", "[[0],[1,2,3]]"})
        CHECK(std::find(b2_max.begin(), b2_max.end(), expected) != b2_max.end());

    CHECK(maximal_congruences(Semilattice::validate({{0}})).empty());

    for (std::size_t n = 1; n <= 5; ++n) {
        const auto chain = Semilattice::validate(oracle::chain_table(n));
        const auto cuts = maximal_cuts(chain);
        REQUIRE(cuts.size() == n - 1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            // The k-th cut by beta value is {> n-2-k}; check the set of all cuts.
            const std::uint64_t lower = (std::uint64_t{1} << (k + 1)) - 1;
            CHECK(std::any_of(cuts.begin(), cuts.end(), [&](const MaximalCut& c) { return c.alpha == lower; }));
        }
    }
    CHECK_THROWS_AS(maximal_congruences(generate(GenSpec::chain(21))), SizeCapExceeded);
}

TEST_CASE("maximal congruences are exactly the coatoms of the congruence lattice (n <= 6)") {
    for (const auto& e : restrict_size(desk_corpus(), 6)) {
        const auto& s = e.algebra;
        const auto congs = all_congruences(s);
        std::vector<Congruence> coatoms;
        for (const auto& c : congs) {
            if (c.is_full())
                continue;
            bool maximal = true;
            for (const auto& d : congs)
                if (d != c && !d.is_full() && contained_in(c, d))
                    maximal = false;
            if (maximal)
                coatoms.push_back(c);
        }
        auto found = maximal_congruences(s);
        for (const auto& m : found)
            CHECK(m.block_count() == 2);
        std::sort(found.begin(), found.end());
        CHECK(found == coatoms);
        // Upper classes complement principal down-sets of non-top elements.
        CHECK(found.size() == s.size() - 1);
    }
}

TEST_CASE("MaximalCut conditions") {
    const auto b2 = Semilattice::validate(oracle::b2_table());
    CHECK(is_maximal_cut(b2, 0b1010));
    CHECK_FALSE(is_maximal_cut(b2, 0b0110)); // {a,b} is not absorbing
    CHECK_FALSE(is_maximal_cut(b2, 0b1000)); // {0,a,b} is not join-closed
    CHECK_FALSE(is_maximal_cut(b2, 0));
    CHECK_FALSE(is_maximal_cut(b2, 0b1111));
}

TEST_CASE("papert decomposition examples") {
    const auto b2 = Semilattice::validate(oracle::b2_table());
    const auto d = papert_decomposition(b2, Congruence::diagonal(b2));
    CHECK(d.size() == 3);
    CHECK(meet_all(b2, d).is_diagonal());
    CHECK(papert_decomposition(b2, Congruence::full(b2)).empty());

    const auto c3 = Semilattice::validate(oracle::chain_table(3));
    const auto theta = Congruence::certify(c3, Partition::parse("[[0],[1,2]]"));
    CHECK(strings(papert_decomposition(c3, theta)) == std::vector<std::string>{"[[0],[1,2]]"});
    CHECK_THROWS_AS(papert_decomposition(b2, theta), MismatchedCarrier);
}

TEST_CASE("papert decomposition meets back for every congruence (n <= 6)") {
    for (const auto& e : restrict_size(desk_corpus(), 6))
        for (const auto& theta : all_congruences(e.algebra))
            REQUIRE(meet_all(e.algebra, papert_decomposition(e.algebra, theta)) == theta);
}

TEST_CASE("all_congruences counts and strategy agreement") {
    const auto c3 = Semilattice::validate(oracle::chain_table(3));
    CHECK(strings(all_congruences(c3)) ==
          std::vector<std::string>{"[[0,1,2]]", "[[0,1],[2]]", "[[0],[1,2]]", "[[0],[1],[2]]"});
    CHECK(all_congruences(Semilattice::validate(oracle::chain_table(4))).size() == 8);
    CHECK(all_congruences(Semilattice::validate({{0}})).size() == 1);

    for (const auto& e : restrict_size(desk_corpus(), 7)) {
        const auto bell = all_congruences(e.algebra, EnumerationStrategy::BellFilter);
        REQUIRE(bell == all_congruences(e.algebra, EnumerationStrategy::MeetClosure));
        REQUIRE(bell.size() == oracle::all_congruences(oracle::table_of(e.algebra)).size());
    }
    CHECK_THROWS_AS(all_congruences(generate(GenSpec::chain(8)), EnumerationStrategy::BellFilter),
                    SizeCapExceeded);
    CHECK(all_congruences(generate(GenSpec::chain(8)), EnumerationStrategy::BellFilter, 8).size() == 128);
    CHECK(all_congruences(generate(GenSpec::chain(10))).size() == 512);
}

TEST_CASE("classify_family") {
    const auto b2 = Semilattice::validate(oracle::b2_table());
    const ComparablePair g(b2, 1, 0);
    const auto maximal = maximal_congruences(b2);
    const auto split = classify_family(b2, maximal, g);
    CHECK(strings(split.phis) == std::vector<std::string>{"[[0,1],[2,3]]"});
    CHECK(split.psis.size() == 2);
    CHECK(split.phis.size() + split.psis.size() == maximal.size());

    const std::vector<Congruence> theta{principal_comparable_formula(b2, g)};
    CHECK(classify_family(b2, theta, g).phis.size() == 1);
    const std::vector<Congruence> delta{Congruence::diagonal(b2)};
    CHECK(classify_family(b2, delta, g).psis.size() == 1);

    const auto c4 = generate(GenSpec::chain(4));
    const std::vector<Congruence> foreign{Congruence::full(c4)};
    CHECK_THROWS_AS(classify_family(b2, foreign, g), MismatchedCarrier);
}
