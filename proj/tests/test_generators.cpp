#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "semicong/generators.hpp"
#include "semicong/json_io.hpp"
#include "semicong/splitmix.hpp"

using namespace semicong;

TEST_CASE("splitmix64 reference outputs") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);
}

TEST_CASE("deterministic kinds") {
    CHECK(generate(GenSpec::chain(3)).table() == oracle::chain_table(3));
    CHECK(generate(GenSpec::free_join(2)).table() == oracle::v_table());
    CHECK(generate(GenSpec::boolean(2)).table() == oracle::b2_table());
    CHECK(generate(GenSpec::free_join(3)).size() == 7);
    CHECK(generate(GenSpec::boolean(3)).size() == 8);
    CHECK(generate(GenSpec::boolean(0)).size() == 1);

    const auto f = generate(GenSpec::fan(3));
    CHECK(f.size() == 4);
    for (Element a = 0; a < 3; ++a)
        for (Element b = 0; b < 3; ++b)
            CHECK(f.join(a, b) == (a == b ? a : 3));
}

TEST_CASE("fan(2) is free_join(2) up to relabeling") {
    const auto fan = generate(GenSpec::fan(2));
    const auto free = generate(GenSpec::free_join(2));
    std::vector<Element> perm(3);
    std::iota(perm.begin(), perm.end(), Element{0});
    bool iso = false;
    do {
        bool ok = true;
        for (Element x = 0; x < 3; ++x)
            for (Element y = 0; y < 3; ++y)
                ok = ok && perm[fan.op(x, y)] == free.op(perm[x], perm[y]);
        iso = iso || ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(iso);
}

TEST_CASE("random_union_closed golden fixture") {
    // Masks drawn by splitmix64(42) & 0xF: {1},{0,1},{2},{0,2}; closure adds
    // {1,2} and {0,1,2}.
    const auto s = generate(GenSpec::random_union_closed(4, 5, 42));
    CHECK(s.labels() == std::vector<std::string>{"{1}", "{0,1}", "{2}", "{0,2}", "{1,2}", "{0,1,2}"});
    const std::vector<std::uint64_t> masks{2, 3, 4, 5, 6, 7};
    CHECK(s.table() == from_union_closed(masks).table());
    CHECK(to_json(s).dump() == to_json(generate(GenSpec::random_union_closed(4, 5, 42))).dump());
}

TEST_CASE("random_union_closed output is union-closed") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto s = generate(GenSpec::random_union_closed(6, 5, seed));
        // Labels carry the sets; rebuild from them and compare.
        std::vector<std::uint64_t> masks;
        for (const auto& l : s.labels()) {
            std::uint64_t m = 0;
            for (char c : l)
                if (c >= '0' && c <= '9')
                    m |= std::uint64_t{1} << (c - '0');
            masks.push_back(m);
        }
        REQUIRE(std::is_sorted(masks.begin(), masks.end()));
        REQUIRE(from_union_closed(masks).table() == s.table());
    }
}

TEST_CASE("random families that outgrow the cap are resampled, then rejected") {
    // 40 random subsets of a 64-point set essentially never close under
    // union within 64 elements.
    CHECK_THROWS_AS(generate(GenSpec::random_union_closed(64, 40, 1)), SizeCapExceeded);
    CHECK(generate(GenSpec::random_union_closed(64, 1, 1)).size() == 1);
}

TEST_CASE("invalid params") {
    CHECK_THROWS_AS(generate(GenSpec::chain(0)), InvalidInput);
    CHECK_THROWS_AS(generate(GenSpec::chain(65)), SizeCapExceeded);
    CHECK_THROWS_AS(generate(GenSpec::free_join(7)), SizeCapExceeded);
    CHECK_THROWS_AS(generate(GenSpec::fan(0)), InvalidInput);
    GenSpec missing{GenKind::RandomUnionClosed, {{"k", 3}}, 1};
    CHECK_THROWS_AS(generate(missing), InvalidInput);
    CHECK_THROWS_AS(parse_gen_kind("lattice"), InvalidInput);
}

TEST_CASE("desk corpus") {
    const auto corpus = desk_corpus();
    CHECK(corpus.size() == 6 + 3 + 3 + 4 + 20);
    std::size_t random = 0;
    for (const auto& e : corpus) {
        CHECK_FALSE(Semilattice::find_axiom_violation(e.algebra.table()));
        random += e.spec.kind == GenKind::RandomUnionClosed;
    }
    CHECK(random == 20);
    CHECK(restrict_size(corpus, 5).size() < corpus.size());
    // Reproducible down to the serialized form.
    const auto again = desk_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i)
        CHECK(to_json(corpus[i].algebra).dump() == to_json(again[i].algebra).dump());
}
