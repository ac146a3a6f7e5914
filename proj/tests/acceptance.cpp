// Acceptance battery: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "semicong/suite.hpp"

int main(int argc, char** argv) {
    using namespace semicong;
    const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
    const auto corpus = desk_corpus();
    std::printf("desk corpus: %zu semilattices\n", corpus.size());
    bool all = true;
    run_suite(corpus, {}, [&](const CriterionResult& r) {
        std::printf("%s criterion %d: %s [%.2fs / %.0fs] %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.time_limit_seconds, r.summary.c_str());
        if (!r.passed || verbose)
            std::cout << r.details.dump(2) << '\n';
        std::fflush(stdout);
        all = all && r.passed;
    });
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
