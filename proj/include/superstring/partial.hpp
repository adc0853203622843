#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superstring/exact.hpp"
#include "superstring/strings.hpp"

namespace superstring {

/// Assignment of one color in {1..k} to every item of a collection.
struct ColorAssignment {
    std::unordered_map<int, int> color;  // item id -> color
    int k = 0;
    std::optional<std::uint64_t> seed;   // absent for enumerated assignments
};

ColorAssignment random_coloring(const WeightedCollection& s, int k,
                                std::uint64_t seed);

struct PartialAnswer {
    bool found = false;
    std::vector<int> chosen;  // item ids, ascending
    std::string superstring;
    std::int64_t weight = 0;
};

/// The table of maximum weights over color subsets: value (X, x, h) is the
/// best total weight of strings with pairwise distinct colors from X that fit
/// in a superstring of length at most h ending exactly with item x. An absent
/// value encodes infeasibility.
class ColorfulDpTable {
public:
    ColorfulDpTable() = default;
    ColorfulDpTable(int k, std::size_t items, std::int64_t ell);

    std::optional<std::int64_t> value(unsigned color_set, std::size_t item_index,
                                      std::int64_t h) const;
    int colors() const { return k_; }
    std::size_t items() const { return items_; }
    std::int64_t ell() const { return ell_; }

private:
    friend struct ColorfulDpRunner;
    struct Cell {
        std::int64_t w = 0;
        bool feasible = false;
    };
    std::size_t cell_index(unsigned color_set, std::size_t item_index,
                           std::int64_t h) const;
    int k_ = 0;
    std::size_t items_ = 0;
    std::int64_t ell_ = -1;
    std::vector<Cell> cells_;
};

struct ColorfulDpResult {
    /// max over x of value({1..k}, x, ell); absent when no colorful selection
    /// of k strings fits.
    std::optional<std::int64_t> max_weight;
    PartialAnswer answer;  // validated witness when max_weight is present
    ColorfulDpTable table;
};

/// The color-coding dynamic program. `table` may pass a precomputed overlap
/// table for the collection to avoid rebuilding it per trial.
ColorfulDpResult colorful_dp(const WeightedCollection& s,
                             const ColorAssignment& coloring, int k,
                             std::int64_t ell,
                             const OverlapTable* table = nullptr);

enum class SolveMode { randomized, deterministic };

struct PartialOptions {
    SolveMode mode = SolveMode::randomized;
    double delta = 0.01;        // randomized one-sided failure bound
    std::uint64_t seed = 0;     // master seed; trials derive from it
    std::int64_t budget = std::int64_t{1} << 21;  // enumeration cap
    ExactOptions exact;
};

/// Number of independent colorings needed so that a false no occurs with
/// probability at most delta: ceil(e^k ln(1/delta)), at least 1.
std::int64_t trials_needed(int k, double delta);

/// Best-weight selection of exactly k strings admitting a superstring of
/// length at most ell; found iff that weight reaches big_w. Randomized mode
/// is true-biased Monte Carlo, deterministic mode is exact.
PartialAnswer solve_weighted(const WeightedCollection& s, int k,
                             std::int64_t ell, std::int64_t big_w,
                             const PartialOptions& options = {});

/// Collapses equal strings, summing weights (multiplicities for a plain
/// multiset); the retained item keeps the lowest id of its group.
WeightedCollection dedupe_to_weighted(const WeightedCollection& s);

/// Partial Superstring on a multiset: is there a superstring of length at
/// most ell covering at least k strings of S? Reduces to the weighted solver
/// over deduplicated strings.
PartialAnswer solve_partial(const WeightedCollection& s, int k,
                            std::int64_t ell, const PartialOptions& options = {});

/// Oracle: enumerates all k-subsets and runs the exact solver on each.
PartialAnswer partial_bruteforce(const WeightedCollection& s, int k,
                                 std::int64_t ell,
                                 std::int64_t budget = std::int64_t{1} << 21);

} // namespace superstring
