#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superstring/strings.hpp"

namespace superstring {

struct ExactResult {
    std::string superstring;
    std::int64_t length = 0;
    /// A permutation of all item ids whose merge-fold yields `superstring`.
    std::vector<int> order;
};

struct ExactOptions {
    /// Maximum number of maximal strings the subset DP will accept; the DP
    /// table has 2^n * n entries.
    int max_bitmask_width = 24;
};

/// Minimum-length superstring of the whole multiset via dynamic programming
/// over subsets of the inclusion-maximal strings. Optimal orders are
/// tie-broken to the lexicographically smallest id sequence.
ExactResult shortest_superstring_dp(const WeightedCollection& s,
                                    const ExactOptions& options = {});

/// Test oracle: folds every permutation of the maximal strings and keeps the
/// best. Guarded by `max_items` (factorial blow-up).
ExactResult shortest_superstring_bruteforce(const WeightedCollection& s,
                                            int max_items = 9);

/// True iff some superstring of S has length at most ell.
bool decide(const WeightedCollection& s, std::int64_t ell,
            const ExactOptions& options = {});

} // namespace superstring
