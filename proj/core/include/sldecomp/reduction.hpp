#pragma once

#include <cstddef>
#include <vector>

#include "sldecomp/matrix.hpp"
#include "sldecomp/search.hpp"

namespace sldecomp {

/// Closed-form factor budget for reducing SL_n to an embedded SL_2: (3n^2 - n - 10)/2.
constexpr std::size_t reduction_budget(std::size_t n) { return (3 * n * n - n - 10) / 2; }
/// Budget of one stage that shrinks a k x k active block to (k-1) x (k-1): 3k - 2.
constexpr std::size_t stage_budget(std::size_t k) { return 3 * k - 2; }

struct StageRecord {
    std::size_t k = 0;               ///< active block size before the stage
    std::size_t length = 0;          ///< factors spent
    std::size_t pivot_candidates = 0;  ///< multiplier candidates examined in step (i)
};

struct ReductionTrace {
    std::vector<SidedFactor> factors;  ///< in application order
    std::vector<StageRecord> stages;   ///< k = n, n-1, ..., 3
    PolyMatrix block;                  ///< residual 2 x 2 block B

    std::size_t length() const noexcept { return factors.size(); }
    bool within_budget(std::size_t n) const noexcept { return length() <= reduction_budget(n); }
};

/// Transforms A into diag(B, I_{n-2}) by sided elementary factors. Each stage works on the
/// last row of the active block: one factor makes its leading part unimodular, at most
/// k-1 factors set its diagonal entry to 1 (Bezout), then at most 2(k-1) factors clear the row
/// and column. Requires n >= 3. Throws CapExceeded if the step-(i) search runs out.
ReductionTrace reduce_to_sl2(const SLMatrix& a, const SearchCaps& caps = {});

}  // namespace sldecomp
