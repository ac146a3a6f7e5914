#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "semicong/json_io.hpp"

using semicong::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = semicong::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) {
    return std::string(SEMICONG_FIXTURES) + "/" + name;
}

} // namespace

TEST_CASE("cli validate") {
    const auto ok = run({"validate", fixture("c3.json")});
    CHECK(ok.code == 0);
    CHECK(ok.json()["valid"] == true);

    const auto broken = run({"validate", fixture("broken.json")});
    CHECK(broken.code == 2);
    CHECK(broken.json()["violation"] == "NotAssociative");
    CHECK(broken.json()["witness"] == Json::parse("[0,1,2]"));
    CHECK_FALSE(broken.err.empty());

    const auto open = run({"validate", fixture("not_closed.json")});
    CHECK(open.code == 2);
    CHECK(open.json()["witness"] == Json::parse("[0,3]"));
    CHECK(open.json()["missing_union"] == "{0,2}");

    CHECK(run({"validate", fixture("missing.json")}).code == 2);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"principal", fixture("c3.json"), "--t", "2"}).code == 2);
    CHECK(run({"principal", fixture("c3.json"), "--t", "9", "--s", "1"}).code == 2);
    CHECK(run({"verify", fixture("c3.json"), "--identity", "pwd", "--t", "1", "--s", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli gen") {
    const auto r = run({"gen", "--kind", "chain", "--params", "n=3"});
    CHECK(r.code == 0);
    CHECK(r.json()["join"] == Json::parse("[[0,1,2],[1,1,2],[2,2,2]]"));

    const auto rnd1 = run({"gen", "--kind", "random_union_closed", "--params", "k=4,m=5", "--seed", "42"});
    const auto rnd2 = run({"gen", "--kind", "random_union_closed", "--params", R"({"k":4,"m":5})", "--seed", "42"});
    CHECK(rnd1.code == 0);
    CHECK(rnd1.out == rnd2.out);
    CHECK(rnd1.json()["n"] == 6);

    CHECK(run({"gen", "--kind", "chain"}).code == 2);
    CHECK(run({"gen", "--kind", "chain", "--params", "n=x"}).code == 2);
    CHECK(run({"gen", "--kind", "nope", "--params", "n=3"}).code == 2);
}

TEST_CASE("cli principal") {
    const auto r = run({"principal", fixture("c3.json"), "--t", "2", "--s", "1", "--method", "both"});
    CHECK(r.code == 0);
    const auto doc = r.json();
    CHECK(doc["formula"] == Json::parse("[[0],[1,2]]"));
    CHECK(doc["closure"] == Json::parse("[[0],[1,2]]"));
    CHECK(doc["agree"] == true);

    const auto f = run({"principal", fixture("v.json"), "--t", "1", "--s", "0"});
    CHECK(f.json()["formula"] == Json::parse("[[0,2],[1]]"));
    CHECK_FALSE(f.json().contains("closure"));
}

TEST_CASE("cli congruences, decompose and quotient") {
    const auto all = run({"congruences", fixture("c3.json")});
    CHECK(all.json()["count"] == 4);
    const auto meet = run({"congruences", fixture("b2.json"), "--strategy", "meet"});
    const auto bell = run({"congruences", fixture("b2.json"), "--strategy", "bell"});
    CHECK(meet.out == bell.out);
    const auto max = run({"congruences", fixture("b2.json"), "--maximal-only"});
    CHECK(max.json()["count"] == 3);

    const auto d = run({"decompose", fixture("b2.json"), "--congruence", "[[0],[1],[2],[3]]"});
    CHECK(d.code == 0);
    CHECK(d.json()["maximal"].size() == 3);
    CHECK(d.json()["meet"] == Json::parse("[[0],[1],[2],[3]]"));
    CHECK(run({"decompose", fixture("b2.json"), "--congruence", "[[0,3],[1],[2]]"}).code == 2);
    CHECK(run({"decompose", fixture("b2.json"), "--congruence", "[[0,1]]"}).code == 2);

    const auto q = run({"quotient", fixture("c3.json"), "--congruence", "[[0],[1,2]]"});
    CHECK(q.code == 0);
    CHECK(q.json()["quotient"]["join"] == Json::parse("[[0,1],[1,1]]"));
    CHECK(q.json()["projection"] == Json::parse("[0,1,1]"));
}

TEST_CASE("cli verify with explicit families") {
    const auto full = run({"verify", fixture("b2.json"), "--identity", "fullpsi", "--t", "1", "--s", "0", "--family",
                           "[[0,2],[1,3]];[[0],[1,2,3]]"});
    CHECK(full.code == 0);
    CHECK(full.json()["holds"] == true);
    CHECK(full.json()["lhs"] == Json::parse("[[0,1,2,3]]"));

    const auto hyp = run({"verify", fixture("b2.json"), "--identity", "fullpsi", "--t", "1", "--s", "0", "--family",
                          "[[0,1],[2,3]]"});
    CHECK(hyp.code == 3);

    const auto cross = run({"verify", fixture("b2.json"), "--identity", "crossing", "--t", "1", "--s", "0",
                            "--family", "[[0,1],[2,3]];[[0,2],[1,3]];[[0],[1,2,3]]"});
    CHECK(cross.code == 0);
    CHECK(cross.json()["rhs"] == Json::parse("[[0,1],[2,3]]"));

    const auto one = run({"verify", fixture("b2.json"), "--identity", "onepsi", "--t", "1", "--s", "0", "--family",
                          "[[0,1],[2,3]];[[0],[1,3],[2]]"});
    CHECK(one.code == 0);
    CHECK(run({"verify", fixture("b2.json"), "--identity", "onepsi", "--t", "1", "--s", "0", "--family",
               "[[0,1],[2,3]];[[0],[1,3],[2]];[[0,2],[1,3]]"})
              .code == 3);

    const auto gen = run({"verify", fixture("b2.json"), "--identity", "generalized", "--t", "1", "--s", "0",
                          "--family", "[[0,2],[1,3]];[[0],[1,2,3]]"});
    CHECK(gen.code == 0);

    const auto pwd = run({"verify", fixture("v.json"), "--identity", "pwd", "--t", "1", "--s", "0", "--family",
                          "[[0,2],[1]];[[0],[1,2]]", "--json-indent", "2"});
    CHECK(pwd.code == 0);
    CHECK(pwd.out.find("\n  ") != std::string::npos);
    CHECK(pwd.json()["lhs"] == Json::parse("[[0,2],[1]]"));

    CHECK(run({"verify", fixture("b2.json"), "--identity", "pwd", "--t", "1", "--s", "0", "--family",
               "[[0,3],[1],[2]]"})
              .code == 2);
}

TEST_CASE("cli verify exhaustive") {
    for (const char* id : {"pwd", "crossing", "onepsi", "generalized", "fullpsi"}) {
        const auto r = run({"verify", fixture("b2.json"), "--identity", id, "--t", "1", "--s", "0", "--exhaustive",
                            "--max-family-size", "3"});
        CAPTURE(id);
        CHECK(r.code == 0);
        CHECK(r.json()["holds"] == true);
        CHECK(r.json()["instances"].get<int>() > 0);
        CHECK(r.json()["truncated"] == false);
    }
    const auto capped = run({"verify", fixture("b2.json"), "--identity", "pwd", "--t", "1", "--s", "0",
                             "--exhaustive", "--instance-cap", "10"});
    CHECK(capped.json()["instances"] == 10);
    CHECK(capped.json()["truncated"] == true);
}

TEST_CASE("cli search-naive") {
    const auto none = run({"search-naive", "--corpus", "desk", "--budget", "0", "--seed", "1"});
    CHECK(none.code == 0);
    CHECK(none.json()["found"] == false);

    const auto chains = run({"search-naive", "--corpus", fixture("c3.json"), "--budget", "500", "--seed", "3"});
    CHECK(chains.code == 0);
    CHECK(chains.json()["trials"] == 500);
    CHECK(chains.json()["containment_holds"] == true);

    const auto a = run({"search-naive", "--budget", "2000", "--seed", "9", "--all"});
    const auto b = run({"search-naive", "--budget", "2000", "--seed", "9", "--all"});
    CHECK(a.out == b.out);
    CHECK(a.code == (a.json()["found"] == true ? 1 : 0));
}

TEST_CASE("cli size cap from the environment") {
    ::setenv("SEMICONG_MAX_N", "3", 1);
    CHECK(run({"validate", fixture("c3.json")}).code == 0);
    CHECK(run({"validate", fixture("b2.json")}).code == 2);
    CHECK(run({"gen", "--kind", "chain", "--params", "n=4"}).code == 2);
    ::setenv("SEMICONG_MAX_N", "bogus", 1);
    CHECK(run({"validate", fixture("c3.json")}).code == 2);
    ::unsetenv("SEMICONG_MAX_N");
}

TEST_CASE("cli suite subset") {
    const auto r = run({"suite", "--preset", "desk", "--criteria", "4,9"});
    CHECK(r.code == 0);
    const auto doc = r.json();
    CHECK(doc["all_passed"] == true);
    CHECK(doc["criteria"].size() == 2);
}
