#include "superstring/exact.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "superstring/errors.hpp"

namespace superstring {
namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

// Appends the ids of non-maximal items (ascending) to an order over the
// maximal ones. Folding them after their containers leaves the result as-is.
std::vector<int> complete_order(std::vector<int> maximal_order,
                                const WeightedCollection& s,
                                const WeightedCollection& maximal) {
    for (const StringItem& it : s.items())
        if (!maximal.has_id(it.id)) maximal_order.push_back(it.id);
    return maximal_order;
}

ExactResult finish(const WeightedCollection& s, std::vector<int> order) {
    ExactResult res;
    res.order = std::move(order);
    res.superstring = superstring_from_order(res.order, s);
    res.length = static_cast<std::int64_t>(res.superstring.size());
    return res;
}

} // namespace

ExactResult shortest_superstring_dp(const WeightedCollection& s,
                                    const ExactOptions& options) {
    if (s.empty()) throw input_error("shortest superstring of an empty collection");
    const MaximalReduction red = reduce_to_maximal(s);
    const WeightedCollection& m = red.collection;
    const int n = static_cast<int>(m.size());
    if (n > options.max_bitmask_width)
        throw capacity_error("instance exceeds the configured bitmask width");

    const OverlapTable table = build_overlap_table(m);
    std::vector<std::int64_t> len(n);
    for (int i = 0; i < n; ++i)
        len[i] = static_cast<std::int64_t>(m.item(i).bytes.size());

    // dp[mask][i]: minimum superstring length over orderings of `mask` that
    // place item i first. Maximal strings never nest, so the fold length
    // decomposes into pairwise consecutive overlaps.
    const std::size_t full = (std::size_t{1} << n);
    std::vector<std::int64_t> dp(full * n, kUnset);
    for (int i = 0; i < n; ++i) dp[(std::size_t{1} << i) * n + i] = len[i];
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            const std::size_t rest = mask ^ (std::size_t{1} << i);
            if (rest == 0) continue;
            std::int64_t best = kUnset;
            for (int j = 0; j < n; ++j) {
                if (!(rest >> j & 1)) continue;
                const std::int64_t sub = dp[rest * n + j];
                if (sub == kUnset) continue;
                best = std::min(best, len[i] - table.ov(i, j) + sub);
            }
            dp[mask * n + i] = best;
        }
    }

    const std::size_t all = full - 1;
    std::int64_t opt = kUnset;
    for (int i = 0; i < n; ++i) opt = std::min(opt, dp[all * n + i]);

    // Front-to-back reconstruction, taking the smallest id at each step;
    // item order is ascending by id, so smallest index = smallest id.
    std::vector<int> order;
    order.reserve(n);
    std::size_t mask = all;
    std::int64_t target = opt;
    int prev = -1;
    while (mask != 0) {
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            const std::int64_t need =
                prev < 0 ? target : target + table.ov(prev, i) - len[prev];
            if (dp[mask * n + i] != need) continue;
            order.push_back(m.item(i).id);
            if (prev >= 0) target = need;
            prev = i;
            mask ^= (std::size_t{1} << i);
            break;
        }
    }
    assert(static_cast<int>(order.size()) == n);

    ExactResult res = finish(s, complete_order(std::move(order), s, m));
    assert(res.length == opt);
    return res;
}

ExactResult shortest_superstring_bruteforce(const WeightedCollection& s,
                                            int max_items) {
    if (s.empty()) throw input_error("shortest superstring of an empty collection");
    const MaximalReduction red = reduce_to_maximal(s);
    const WeightedCollection& m = red.collection;
    const int n = static_cast<int>(m.size());
    if (n > max_items)
        throw capacity_error("too many maximal strings for permutation brute force");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_order;
    std::string best;
    do {
        std::string acc;
        for (int idx : perm) acc = merge(acc, m.item(idx).bytes);
        if (best_order.empty() || acc.size() < best.size()) {
            best = std::move(acc);
            best_order.assign(perm.begin(), perm.end());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> order;
    order.reserve(n);
    for (int idx : best_order) order.push_back(m.item(idx).id);
    return finish(s, complete_order(std::move(order), s, m));
}

bool decide(const WeightedCollection& s, std::int64_t ell,
            const ExactOptions& options) {
    if (ell < 0) throw input_error("decision threshold must be non-negative");
    if (s.empty()) return true;  // the empty string covers an empty collection
    return shortest_superstring_dp(s, options).length <= ell;
}

} // namespace superstring
