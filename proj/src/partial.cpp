#include "superstring/partial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "superstring/errors.hpp"

namespace superstring {
namespace {

constexpr std::int64_t kCellBudget = std::int64_t{1} << 27;
constexpr std::int64_t kUnsetLength = std::numeric_limits<std::int64_t>::max() >> 2;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // stays integral step by step
        if (r > cap) return cap + 1;
    }
    return r;
}

std::int64_t power_capped(std::int64_t base, int exp, std::int64_t cap) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / std::max<std::int64_t>(base, 1)) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Ascending-lexicographic enumeration of k-subsets of {0..n-1}; stops early
// when fn returns false.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

void validate_answer(const WeightedCollection& s, const PartialAnswer& a, int k,
                     std::int64_t ell) {
    if (!a.found) return;
    if (static_cast<std::int64_t>(a.superstring.size()) > ell)
        throw std::logic_error("partial witness exceeds the length bound");
    if (static_cast<int>(a.chosen.size()) != k)
        throw std::logic_error("partial witness has the wrong cardinality");
    std::int64_t w = 0;
    for (int id : a.chosen) {
        if (!contains(a.superstring, s.by_id(id).bytes))
            throw std::logic_error("partial witness misses a chosen string");
        w += s.weight_of_id(id);
    }
    if (w != a.weight) throw std::logic_error("partial witness weight mismatch");
}

struct SubsetScan {
    PartialAnswer best;              // highest weight feasible selection
    std::int64_t enumerated = 0;
};

// Exact max-weight k-subset admitting a superstring of length <= ell. One
// overlap table serves every subset; the per-subset optimum is a small
// in-place Held-Karp over its inclusion-maximal members.
SubsetScan scan_subsets(const WeightedCollection& s, int k, std::int64_t ell,
                        const ExactOptions& exact, bool stop_at_first) {
    SubsetScan scan;
    const int n = static_cast<int>(s.size());
    if (k > 24) throw capacity_error("subset size exceeds the inline DP width");
    const OverlapTable table = build_overlap_table(s);
    std::vector<std::int64_t> len(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        len[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(s.item(static_cast<std::size_t>(i)).bytes.size());

    std::vector<int> kept;
    std::vector<std::int64_t> dp;
    const auto subset_optimum = [&](const std::vector<int>& idx) {
        kept.clear();
        for (std::size_t a = 0; a < idx.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < idx.size() && !drop; ++b) {
                if (a == b) continue;
                const auto ia = static_cast<std::size_t>(idx[a]);
                const auto ib = static_cast<std::size_t>(idx[b]);
                if (!table.sub(ia, ib)) continue;
                // equal duplicates keep the lower index (= lower id)
                drop = !table.sub(ib, ia) || b < a;
            }
            if (!drop) kept.push_back(idx[a]);
        }
        const int kk = static_cast<int>(kept.size());
        if (kk == 1) return len[static_cast<std::size_t>(kept[0])];
        const std::size_t full = std::size_t{1} << kk;
        dp.assign(full * static_cast<std::size_t>(kk), kUnsetLength);
        for (int i = 0; i < kk; ++i)
            dp[(std::size_t{1} << i) * static_cast<std::size_t>(kk) +
               static_cast<std::size_t>(i)] = len[static_cast<std::size_t>(kept[i])];
        for (std::size_t mask = 1; mask < full; ++mask)
            for (int i = 0; i < kk; ++i) {
                if (!(mask >> i & 1)) continue;
                const std::size_t rest = mask ^ (std::size_t{1} << i);
                if (rest == 0) continue;
                std::int64_t best = kUnsetLength;
                for (int j = 0; j < kk; ++j) {
                    if (!(rest >> j & 1)) continue;
                    const std::int64_t sub =
                        dp[rest * static_cast<std::size_t>(kk) + static_cast<std::size_t>(j)];
                    if (sub == kUnsetLength) continue;
                    best = std::min(best,
                                    len[static_cast<std::size_t>(kept[i])] -
                                        table.ov(static_cast<std::size_t>(kept[i]),
                                                 static_cast<std::size_t>(kept[j])) +
                                        sub);
                }
                dp[mask * static_cast<std::size_t>(kk) + static_cast<std::size_t>(i)] = best;
            }
        std::int64_t opt = kUnsetLength;
        for (int i = 0; i < kk; ++i)
            opt = std::min(opt, dp[(full - 1) * static_cast<std::size_t>(kk) +
                                   static_cast<std::size_t>(i)]);
        return opt;
    };

    for_each_combination(n, k, [&](const std::vector<int>& idx) {
        ++scan.enumerated;
        std::int64_t wsum = 0;
        for (int i : idx) wsum += s.weight(static_cast<std::size_t>(i));
        if (scan.best.found && wsum <= scan.best.weight) return true;
        if (subset_optimum(idx) > ell) return true;
        WeightedCollection sub;
        for (int i : idx) {
            const auto si = static_cast<std::size_t>(i);
            sub.append_with_id(s.item(si).id, s.item(si).bytes, s.weight(si));
        }
        const ExactResult r = shortest_superstring_dp(sub, exact);
        if (r.length > ell)
            throw std::logic_error("inline subset DP disagrees with the exact solver");
        scan.best.found = true;
        scan.best.chosen.clear();
        for (int i : idx) scan.best.chosen.push_back(s.item(static_cast<std::size_t>(i)).id);
        scan.best.superstring = r.superstring;
        scan.best.weight = wsum;
        return !stop_at_first;
    });
    return scan;
}

} // namespace

ColorAssignment random_coloring(const WeightedCollection& s, int k,
                                std::uint64_t seed) {
    if (k < 1) throw input_error("color count must be at least 1");
    ColorAssignment c;
    c.k = k;
    c.seed = seed;
    std::mt19937_64 rng(seed);
    for (const StringItem& it : s.items())
        c.color.emplace(it.id, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
    return c;
}

ColorfulDpTable::ColorfulDpTable(int k, std::size_t items, std::int64_t ell)
    : k_(k), items_(items), ell_(ell) {
    const std::int64_t cells = (std::int64_t{1} << k) *
                               static_cast<std::int64_t>(items) * (ell + 1);
    if (k < 1 || k > 25 || cells > kCellBudget)
        throw capacity_error("colorful DP table exceeds the cell budget");
    cells_.assign(static_cast<std::size_t>(cells), Cell{});
}

std::size_t ColorfulDpTable::cell_index(unsigned color_set, std::size_t item_index,
                                        std::int64_t h) const {
    return (static_cast<std::size_t>(color_set) * items_ + item_index) *
               static_cast<std::size_t>(ell_ + 1) +
           static_cast<std::size_t>(h);
}

std::optional<std::int64_t> ColorfulDpTable::value(unsigned color_set,
                                                   std::size_t item_index,
                                                   std::int64_t h) const {
    if (color_set >= (1u << k_) || item_index >= items_ || h < 0 || h > ell_)
        throw input_error("colorful DP table index out of range");
    const Cell& c = cells_[cell_index(color_set, item_index, h)];
    if (!c.feasible) return std::nullopt;
    return c.w;
}

struct ColorfulDpRunner {
    enum class Step : std::uint8_t { none, base, absorb, extend };
    struct Parent {
        Step step = Step::none;
        std::int32_t via = -1;  // other item index for absorb/extend
    };

    const WeightedCollection& s;
    const ColorAssignment& coloring;
    const int k;
    const std::int64_t ell;
    const OverlapTable& table;
    ColorfulDpTable dp;
    std::vector<Parent> parents;
    std::vector<int> colors;                 // per item index
    std::vector<std::vector<int>> inside;    // y indices with y contained in x
    std::vector<std::vector<int>> mergeable; // y indices with neither nested

    ColorfulDpRunner(const WeightedCollection& s_, const ColorAssignment& c_,
                     int k_, std::int64_t ell_, const OverlapTable& t_)
        : s(s_), coloring(c_), k(k_), ell(ell_), table(t_), dp(k_, s_.size(), ell_) {
        parents.assign(dp.cells_.size(), Parent{});
        const std::size_t n = s.size();
        colors.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = coloring.color.find(s.item(i).id);
            if (it == coloring.color.end() || it->second < 1 || it->second > k)
                throw input_error("coloring must assign every item a color in 1..k");
            colors[i] = it->second;
        }
        inside.resize(n);
        mergeable.resize(n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                if (table.sub(y, x)) inside[x].push_back(static_cast<int>(y));
                else if (!table.sub(x, y)) mergeable[x].push_back(static_cast<int>(y));
            }
    }

    void set(unsigned X, std::size_t x, std::int64_t h, std::int64_t w, Step step,
             std::int32_t via) {
        const std::size_t ci = dp.cell_index(X, x, h);
        auto& cell = dp.cells_[ci];
        if (!cell.feasible || w > cell.w) {
            cell.feasible = true;
            cell.w = w;
            parents[ci] = Parent{step, via};
        }
    }

    void run() {
        const std::size_t n = s.size();
        const unsigned full = (1u << k) - 1;
        for (unsigned X = 1; X <= full; ++X) {
            const bool single = (X & (X - 1)) == 0;
            for (std::size_t x = 0; x < n; ++x) {
                const std::int64_t xlen = static_cast<std::int64_t>(s.item(x).bytes.size());
                const unsigned xbit = 1u << (colors[x] - 1);
                if (single) {
                    if (X != xbit) continue;
                    for (std::int64_t h = xlen; h <= ell; ++h)
                        set(X, x, h, s.weight(x), Step::base, -1);
                    continue;
                }
                if (!(X & xbit)) continue;  // x itself needs a color from X
                for (std::int64_t h = 0; h <= ell; ++h) {
                    // absorb a substring y of x, color of y drawn from X
                    for (int y : inside[x]) {
                        const unsigned ybit = 1u << (colors[y] - 1);
                        if (!(X & ybit)) continue;
                        const std::size_t pi = dp.cell_index(X ^ ybit, x, h);
                        if (!dp.cells_[pi].feasible) continue;
                        set(X, x, h, dp.cells_[pi].w + s.weight(y), Step::absorb, y);
                    }
                    // extend a shorter superstring ending with y by appending x
                    for (int y : mergeable[x]) {
                        const std::int64_t hy =
                            h - xlen + table.ov(static_cast<std::size_t>(y), x);
                        if (hy < 0) continue;
                        const std::size_t pi =
                            dp.cell_index(X ^ xbit, static_cast<std::size_t>(y),
                                          std::min(hy, ell));
                        if (!dp.cells_[pi].feasible) continue;
                        set(X, x, h, dp.cells_[pi].w + s.weight(x), Step::extend, y);
                    }
                }
            }
        }
    }

    ColorfulDpResult extract() {
        ColorfulDpResult res;
        const std::size_t n = s.size();
        const unsigned full = (1u << k) - 1;
        std::size_t best_x = 0;
        for (std::size_t x = 0; x < n; ++x) {
            const auto v = dp.value(full, x, ell);
            if (v && (!res.max_weight || *v > *res.max_weight)) {
                res.max_weight = v;
                best_x = x;
            }
        }
        if (res.max_weight) {
            res.answer = reconstruct(full, best_x, ell);
            validate_answer(s, res.answer, k, ell);
            if (res.answer.weight != *res.max_weight)
                throw std::logic_error("colorful DP witness weight mismatch");
        }
        res.table = std::move(dp);
        return res;
    }

    PartialAnswer reconstruct(unsigned X, std::size_t x, std::int64_t h) {
        PartialAnswer a;
        a.found = true;
        std::vector<std::size_t> chain;  // items appended by extend steps, last first
        std::vector<std::size_t> picked;
        while (true) {
            const std::size_t ci = dp.cell_index(X, x, h);
            const Parent p = parents[ci];
            if (p.step == Step::base) {
                picked.push_back(x);
                chain.push_back(x);
                break;
            }
            if (p.step == Step::absorb) {
                const auto y = static_cast<std::size_t>(p.via);
                picked.push_back(y);
                X ^= 1u << (colors[y] - 1);
                continue;
            }
            if (p.step == Step::extend) {
                const auto y = static_cast<std::size_t>(p.via);
                picked.push_back(x);
                chain.push_back(x);
                const std::int64_t xlen =
                    static_cast<std::int64_t>(s.item(x).bytes.size());
                const std::int64_t hy = std::min(h - xlen + table.ov(y, x), ell);
                X ^= 1u << (colors[x] - 1);
                x = y;
                h = hy;
                continue;
            }
            throw std::logic_error("colorful DP parent chain broken");
        }
        std::reverse(chain.begin(), chain.end());
        std::string acc = s.item(chain[0]).bytes;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            const std::int64_t ov = table.ov(chain[i - 1], chain[i]);
            acc.append(s.item(chain[i]).bytes, static_cast<std::size_t>(ov),
                       std::string::npos);
        }
        a.superstring = std::move(acc);
        for (std::size_t i : picked) {
            a.chosen.push_back(s.item(i).id);
            a.weight += s.weight(i);
        }
        std::sort(a.chosen.begin(), a.chosen.end());
        return a;
    }
};

ColorfulDpResult colorful_dp(const WeightedCollection& s,
                             const ColorAssignment& coloring, int k,
                             std::int64_t ell, const OverlapTable* table) {
    if (k < 1) throw input_error("color count must be at least 1");
    if (coloring.k != k) throw input_error("coloring palette size mismatch");
    if (ell < 0) throw input_error("length bound must be non-negative");
    OverlapTable local;
    if (table == nullptr) {
        local = build_overlap_table(s);
        table = &local;
    }
    ColorfulDpRunner runner(s, coloring, k, ell, *table);
    runner.run();
    return runner.extract();
}

std::int64_t trials_needed(int k, double delta) {
    if (k < 1) throw input_error("k must be at least 1");
    if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
    const long double trials =
        std::ceil(std::exp(static_cast<long double>(k)) *
                  std::log(1.0L / static_cast<long double>(delta)));
    if (trials >= 9.0e18L) return std::numeric_limits<std::int64_t>::max();
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(trials));
}

PartialAnswer solve_weighted(const WeightedCollection& s, int k,
                             std::int64_t ell, std::int64_t big_w,
                             const PartialOptions& options) {
    if (k < 1) throw input_error("k must be at least 1");
    if (ell < 0) throw input_error("length bound must be non-negative");
    if (big_w < 0) throw input_error("weight threshold must be non-negative");
    const int n = static_cast<int>(s.size());
    if (k > n) return PartialAnswer{};

    // Concatenating any k strings stays within ell: pick the heaviest ones.
    const std::int64_t m = s.max_length();
    if (ell >= static_cast<std::int64_t>(k) * m) {
        std::vector<std::size_t> idx(s.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return s.weight(a) > s.weight(b);
        });
        idx.resize(static_cast<std::size_t>(k));
        std::sort(idx.begin(), idx.end());
        PartialAnswer a;
        std::string acc;
        for (std::size_t i : idx) {
            acc = merge(acc, s.item(i).bytes);
            a.chosen.push_back(s.item(i).id);
            a.weight += s.weight(i);
        }
        a.superstring = std::move(acc);
        a.found = a.weight >= big_w;
        if (a.found) validate_answer(s, a, k, ell);
        return a.found ? a : PartialAnswer{};
    }

    if (options.mode == SolveMode::deterministic) {
        const std::int64_t subsets = binomial_capped(n, k, options.budget);
        const std::int64_t colorings = power_capped(k, n, options.budget);
        if (subsets <= options.budget) {
            SubsetScan scan = scan_subsets(s, k, ell, options.exact, false);
            if (scan.best.found && scan.best.weight >= big_w) {
                validate_answer(s, scan.best, k, ell);
                return scan.best;
            }
            return PartialAnswer{};
        }
        if (colorings <= options.budget) {
            const OverlapTable table = build_overlap_table(s);
            PartialAnswer best;
            std::vector<int> assignment(s.size(), 1);
            while (true) {
                ColorAssignment c;
                c.k = k;
                for (std::size_t i = 0; i < s.size(); ++i)
                    c.color.emplace(s.item(i).id, assignment[i]);
                ColorfulDpResult r = colorful_dp(s, c, k, ell, &table);
                if (r.max_weight && (!best.found || *r.max_weight > best.weight))
                    best = r.answer;
                std::size_t pos = 0;
                while (pos < assignment.size() && assignment[pos] == k)
                    assignment[pos++] = 1;
                if (pos == assignment.size()) break;
                ++assignment[pos];
            }
            if (best.found && best.weight >= big_w) return best;
            return PartialAnswer{};
        }
        throw capacity_error("deterministic enumeration exceeds the budget");
    }

    const std::int64_t trials = trials_needed(k, options.delta);
    if (trials > 10'000'000)
        throw capacity_error("randomized trial count is impractically large");
    const OverlapTable table = build_overlap_table(s);
    for (std::int64_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed =
            splitmix64(options.seed + static_cast<std::uint64_t>(t));
        const ColorAssignment c = random_coloring(s, k, trial_seed);
        ColorfulDpResult r = colorful_dp(s, c, k, ell, &table);
        if (r.max_weight && *r.max_weight >= big_w) return r.answer;
    }
    return PartialAnswer{};
}

WeightedCollection dedupe_to_weighted(const WeightedCollection& s) {
    WeightedCollection out;
    std::vector<bool> used(s.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (used[i]) continue;
        std::int64_t w = s.weight(i);
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!used[j] && s.item(j).bytes == s.item(i).bytes) {
                used[j] = true;
                w += s.weight(j);
            }
        out.append_with_id(s.item(i).id, s.item(i).bytes, w);
    }
    return out;
}

PartialAnswer solve_partial(const WeightedCollection& s, int k, std::int64_t ell,
                            const PartialOptions& options) {
    if (k < 0) throw input_error("k must be non-negative");
    if (ell < 0) throw input_error("length bound must be non-negative");
    if (k == 0) {
        PartialAnswer a;
        a.found = true;
        return a;
    }
    if (k > static_cast<int>(s.size())) return PartialAnswer{};

    const WeightedCollection all = dedupe_to_weighted(s);
    // Zero-weight strings cannot help the covering count.
    WeightedCollection dedup;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all.weight(i) > 0)
            dedup.append_with_id(all.item(i).id, all.item(i).bytes, all.weight(i));

    // Weights are multiplicities (>= 1), so a minimal witness keeps at most
    // k distinct strings; the substring-count bound caps the loop as well.
    std::int64_t upper = std::min<std::int64_t>(static_cast<std::int64_t>(dedup.size()), k);
    if (ell < (std::int64_t{1} << 31))
        upper = std::min(upper, ell * (ell + 1) / 2);
    for (std::int64_t kp = 1; kp <= upper; ++kp) {
        PartialAnswer a =
            solve_weighted(dedup, static_cast<int>(kp), ell, k, options);
        if (!a.found) continue;
        // Report original coverage: every copy of a chosen string is covered.
        std::vector<int> covered;
        for (const StringItem& it : s.items())
            for (int id : a.chosen)
                if (dedup.by_id(id).bytes == it.bytes) {
                    covered.push_back(it.id);
                    break;
                }
        PartialAnswer out;
        out.found = true;
        out.superstring = a.superstring;
        out.weight = a.weight;
        out.chosen.assign(covered.begin(),
                          covered.begin() + static_cast<std::ptrdiff_t>(
                                                std::min<std::size_t>(covered.size(),
                                                                      static_cast<std::size_t>(k))));
        return out;
    }
    return PartialAnswer{};
}

PartialAnswer partial_bruteforce(const WeightedCollection& s, int k,
                                 std::int64_t ell, std::int64_t budget) {
    if (k < 0) throw input_error("k must be non-negative");
    if (ell < 0) throw input_error("length bound must be non-negative");
    if (k == 0) {
        PartialAnswer a;
        a.found = true;
        return a;
    }
    const int n = static_cast<int>(s.size());
    if (k > n) return PartialAnswer{};
    if (binomial_capped(n, k, budget) > budget)
        throw capacity_error("subset enumeration exceeds the budget");
    SubsetScan scan = scan_subsets(s, k, ell, ExactOptions{}, true);
    if (scan.best.found) validate_answer(s, scan.best, k, ell);
    return scan.best;
}

} // namespace superstring
