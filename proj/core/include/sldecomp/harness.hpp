#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sldecomp/matrix.hpp"
#include "sldecomp/reduction.hpp"
#include "sldecomp/sl2.hpp"

namespace sldecomp {

/// Total length bound for SL_n: (3n^2 - n)/2 + 50.
constexpr std::size_t total_bound(std::size_t n) { return (3 * n * n - n) / 2 + 50; }

struct RunConfig {
    std::uint32_t q = 3;
    std::size_t n = 3;
    std::size_t word_length = 40;   ///< elementary factors in a generated matrix
    std::size_t degree_bound = 3;   ///< entry degree bound of generated factors
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    Mode mode = Mode::Fallback;
    SearchCaps caps;
    std::string output;             ///< report path, empty for stdout
    unsigned threads = 1;

    /// Throws PreconditionError unless q is supported, n >= 3 and trials >= 1.
    void validate() const;
};

/// Per-trial seed derived from (seed, trial) with splitmix64.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Product of config.word_length random elementary factors, deterministic in `seed`.
SLMatrix generate_random_sl(const RunConfig& config, std::uint64_t seed);

struct DecompositionReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;      ///< generator seed, 0 for user-supplied input
    std::string mode;            ///< "strict" or "fallback"
    PolyMatrix input{2, 0};
    Word word;
    std::size_t length = 0;
    std::size_t reduction_length = 0;
    std::vector<StageRecord> stages;
    PhaseReport normalize;
    PhaseReport bridge;
    PhaseReport collapse;
    bool strict_complete = false;
    std::size_t bound = 0;
    bool bound_satisfied = false;
    bool verified = false;
    SearchStats prime_search;
    SearchStats residue_search;
    SearchStats companion_search;
    std::string eps_b;  ///< decimal
    std::string eps_c;  ///< decimal
    double seconds = 0;
};

/// reduce_to_sl2, decompose_sl2_block and flatten. In strict mode a phase without a
/// bounded word makes the run fall back and clears strict_complete. Throws CapExceeded.
DecompositionReport decompose(const SLMatrix& a, const RunConfig& config);

struct TrialOutcome {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<DecompositionReport> report;
    std::string error;  ///< set when report is empty
};

struct BenchSummary {
    std::size_t trials = 0;
    std::size_t verified = 0;
    std::size_t failures = 0;        ///< errors other than CapExceeded, or unverified words
    std::size_t cap_exceeded = 0;
    std::size_t strict_complete = 0;
    std::size_t strict_over_bound = 0;
    std::size_t reduction_over_budget = 0;
    std::size_t max_length = 0;
    std::size_t max_strict_length = 0;
    std::size_t max_reduction_length = 0;
    double seconds = 0;
};

/// Runs config.trials generated trials on config.threads threads. `emit` is called once per
/// trial in trial order, from the calling thread.
BenchSummary run_bench(const RunConfig& config, const std::function<void(const TrialOutcome&)>& emit = {});

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SelftestOptions {
    std::size_t trials = 4;       ///< end-to-end decompositions per field
    bool corrupt_word = false;    ///< flip one factor of each end-to-end word before verifying
    std::uint64_t seed = 7;
};

struct SelftestReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Small exhaustive and randomized checks across all modules.
SelftestReport selftest(const SelftestOptions& options = {});

}  // namespace sldecomp
