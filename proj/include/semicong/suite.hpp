#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semicong/generators.hpp"
#include "semicong/json_io.hpp"

namespace semicong {

/// Outcome of one acceptance criterion. `passed` requires both a correct
/// result and a runtime within `time_limit_seconds`.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    double time_limit_seconds = 0;
    std::string summary;
    /// Counters and, on failure, a full dump of the offending instance.
    Json details;
};

struct SuiteOptions {
    std::uint64_t seed = 0x5eed2024;
    std::size_t naive_budget = 100000;
    std::size_t fuzz_mutations = 1000;
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1-based) over `corpus`.
CriterionResult run_criterion(int id, const std::vector<CorpusEntry>& corpus, const SuiteOptions& options = {});

/// Runs every criterion in order, calling `on_result` after each one.
std::vector<CriterionResult> run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options = {},
                                       const std::function<void(const CriterionResult&)>& on_result = {});

Json to_json(const CriterionResult& result);

} // namespace semicong
