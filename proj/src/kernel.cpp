#include "superstring/kernel.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "superstring/errors.hpp"

namespace superstring {
namespace {

struct WorkItem {
    int id;
    std::string bytes;
};

WeightedCollection to_collection(const std::vector<WorkItem>& items) {
    WeightedCollection s;
    for (const WorkItem& it : items) s.append_with_id(it.id, it.bytes, 1);
    return s;
}

std::int64_t len(const WorkItem& it) {
    return static_cast<std::int64_t>(it.bytes.size());
}

// Lowest byte value absent from every current string, or -1 if all occur.
int unused_byte(const std::vector<WorkItem>& items) {
    std::array<bool, 256> seen{};
    for (const WorkItem& it : items)
        for (unsigned char c : it.bytes) seen[c] = true;
    for (int b = 0; b < 256; ++b)
        if (!seen[static_cast<std::size_t>(b)]) return b;
    return -1;
}

// True when swapping items[i].bytes for `replacement` changes no pairwise
// overlap or containment against the other strings.
bool splice_is_conservative(const std::vector<WorkItem>& items, std::size_t i,
                            const std::string& replacement) {
    for (std::size_t j = 0; j < items.size(); ++j) {
        if (j == i) continue;
        const std::string& other = items[j].bytes;
        const std::string& original = items[i].bytes;
        if (overlap_length(replacement, other) != overlap_length(original, other))
            return false;
        if (overlap_length(other, replacement) != overlap_length(other, original))
            return false;
        if (contains(other, replacement) || contains(replacement, other))
            return false;
    }
    return true;
}

} // namespace

KernelOutcome kernelize(const WeightedCollection& input, std::int64_t ell) {
    if (ell < 0) throw input_error("length bound must be non-negative");

    std::vector<WorkItem> cur;
    cur.reserve(input.size());
    for (const StringItem& it : input.items()) cur.push_back({it.id, it.bytes});
    std::int64_t r = input.total_length() - ell;

    KernelOutcome out;
    auto fire = [&](std::string rule, std::vector<int> ids,
                    std::map<std::string, std::int64_t> detail = {}) -> RuleFiring& {
        out.trace.push_back(RuleFiring{std::move(rule), std::move(ids), ell, r,
                                       std::move(detail)});
        return out.trace.back();
    };
    auto decide_now = [&](bool answer, const std::string& rule) {
        out.kind = KernelOutcome::Kind::decided;
        out.answer = answer;
        out.decided_by = rule;
        return out;
    };

    // An instance with no strings is answered by the empty superstring.
    if (cur.empty()) {
        fire("rule2", {}, {{"note_empty_input", 1}});
        return decide_now(true, "rule2");
    }

    while (true) {
        // Rules 1-3 to a fixpoint, restarting from Rule 1 after any change.
        bool rules123_done = false;
        while (!rules123_done) {
            const WeightedCollection view = to_collection(cur);
            const OverlapTable table = build_overlap_table(view);
            const std::size_t n = cur.size();

            // Rule 1: drop a string contained in another; equal duplicates
            // keep their lowest-id copy.
            bool fired = false;
            for (std::size_t i = 0; i < n && !fired && n > 1; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || !table.sub(i, j)) continue;
                    const bool dup = cur[i].bytes == cur[j].bytes;
                    if (dup && cur[j].id > cur[i].id) continue;
                    r -= len(cur[i]);
                    fire("rule1", {cur[i].id, cur[j].id},
                         {{"deleted_length", len(cur[i])}});
                    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
                    fired = true;
                    break;
                }
            }
            if (fired) {
                if (r <= 0) return decide_now(true, "rule1");
                continue;
            }

            // Rule 2: drop a string with empty overlaps in both directions
            // against everything else.
            for (std::size_t i = 0; i < n && !fired; ++i) {
                bool isolated = true;
                for (std::size_t j = 0; j < n && isolated; ++j)
                    if (i != j && (table.ov(i, j) > 0 || table.ov(j, i) > 0))
                        isolated = false;
                if (!isolated) continue;
                ell -= len(cur[i]);
                fire("rule2", {cur[i].id}, {{"deleted_length", len(cur[i])}});
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
                fired = true;
            }
            if (fired) {
                if (cur.empty() && ell >= 0) return decide_now(true, "rule2");
                if (ell < 0) return decide_now(false, "rule2");
                continue;
            }

            // Rule 3: an overlap of length >= r pays for the whole compression.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || table.ov(i, j) < r) continue;
                    fire("rule3", {cur[i].id, cur[j].id},
                         {{"overlap", table.ov(i, j)}});
                    return decide_now(true, "rule3");
                }
            rules123_done = true;
        }

        // Rule 4: shorten a long string. Every overlap is below r after Rule
        // 3, so only the first and last r-1 symbols of x can ever engage a
        // neighbor. The plain prefix_r+suffix_r splice is not safe: the two
        // halves can accidentally form a substring of another string (or
        // inflate an overlap) across the seam and flip the answer. Sealing
        // the seam with a byte that occurs nowhere else in the instance
        // keeps every pairwise overlap and containment exactly as it was.
        bool shrunk = false;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (len(cur[i]) <= 2 * r) continue;
            if (r < 2) throw std::logic_error("rule 4 reached with r < 2");
            const std::int64_t old_len = len(cur[i]);
            const int seam = unused_byte(cur);
            const std::size_t keep = static_cast<std::size_t>(r - 1);
            std::string replacement;
            if (seam >= 0) {
                replacement = cur[i].bytes.substr(0, keep) +
                              static_cast<char>(seam) +
                              cur[i].bytes.substr(cur[i].bytes.size() - keep);
            } else {
                // all 256 byte values occur: fall back to the raw splice,
                // but only when it provably changes no pairwise relation
                const std::size_t rs = static_cast<std::size_t>(r);
                replacement = cur[i].bytes.substr(0, rs) +
                              cur[i].bytes.substr(cur[i].bytes.size() - rs);
                if (!splice_is_conservative(cur, i, replacement)) continue;
            }
            ell += static_cast<std::int64_t>(replacement.size()) - old_len;
            cur[i].bytes = std::move(replacement);
            fire("rule4", {cur[i].id},
                 {{"old_length", old_len},
                  {"r_used", r},
                  {"new_length", len(cur[i])},
                  {"separator", seam}});
            if (ell < 0) return decide_now(false, "rule4");
            shrunk = true;
            break;
        }
        if (!shrunk) break;
    }

    const WeightedCollection view = to_collection(cur);
    MatchingContext ctx = build_conflict_graph(view);

    // Rule 5: r disjoint overlapping pairs already achieve compression r.
    if (static_cast<std::int64_t>(ctx.matching.size()) >= r) {
        fire("rule5", ctx.x_ids,
             {{"matching_size", static_cast<std::int64_t>(ctx.matching.size())}});
        return decide_now(true, "rule5");
    }

    const CandidateSets sets = candidate_sets(ctx, view);
    std::set<int> keep(ctx.x_ids.begin(), ctx.x_ids.end());
    for (const auto& [pair, ids] : sets.r_sets) keep.insert(ids.begin(), ids.end());
    for (const auto& [i, ids] : sets.s_sets) keep.insert(ids.begin(), ids.end());
    for (const auto& [i, ids] : sets.t_sets) keep.insert(ids.begin(), ids.end());

    std::vector<int> dropped;
    std::int64_t dropped_length = 0;
    for (const WorkItem& it : cur)
        if (!keep.count(it.id)) {
            dropped.push_back(it.id);
            dropped_length += len(it);
        }
    const std::int64_t ell_prime = ell - dropped_length;

    // Rule 6: decide negative budgets, otherwise emit the reduced instance.
    RuleFiring& record = fire("rule6", dropped,
                              {{"ell_prime", ell_prime},
                               {"h", static_cast<std::int64_t>(ctx.x_ids.size())}});
    record.ell_after = ell_prime;
    if (ell_prime < 0) return decide_now(false, "rule6");

    out.kind = KernelOutcome::Kind::reduced;
    out.decided_by = "rule6";
    out.reduced_ell = ell_prime;
    for (const WorkItem& it : cur)
        if (keep.count(it.id)) out.reduced.append_with_id(it.id, it.bytes, 1);
    return out;
}

MatchingContext build_conflict_graph(const WeightedCollection& s) {
    MatchingContext ctx;
    const std::size_t n = s.size();
    for (const StringItem& it : s.items()) ctx.vertex_ids.push_back(it.id);
    if (n == 0) return ctx;

    const OverlapTable table = build_overlap_table(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table.ov(i, j) > 0 || table.ov(j, i) > 0)
                ctx.edges.emplace_back(std::min(s.item(i).id, s.item(j).id),
                                       std::max(s.item(i).id, s.item(j).id));
    std::sort(ctx.edges.begin(), ctx.edges.end());

    std::set<int> matched;
    for (const auto& [a, b] : ctx.edges)
        if (!matched.count(a) && !matched.count(b)) {
            ctx.matching.emplace_back(a, b);
            matched.insert(a);
            matched.insert(b);
        }
    for (int id : ctx.vertex_ids)
        (matched.count(id) ? ctx.x_ids : ctx.y_ids).push_back(id);

    // X is a vertex cover and Y an independent set by maximality.
    for (const auto& [a, b] : ctx.edges)
        if (!matched.count(a) && !matched.count(b))
            throw std::logic_error("maximal matching left an edge uncovered");
    return ctx;
}

CandidateSets candidate_sets(const MatchingContext& ctx,
                             const WeightedCollection& s) {
    if (ctx.x_ids.empty())
        throw input_error("candidate sets need a nonempty endpoint set X");
    const OverlapTable table = build_overlap_table(s);
    const std::size_t h = ctx.x_ids.size();
    const std::size_t limit = std::min(2 * h, ctx.y_ids.size());

    auto take_top = [&](auto&& key) {
        std::vector<int> ids = ctx.y_ids;
        std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
            const std::int64_t ka = key(a), kb = key(b);
            if (ka != kb) return ka > kb;
            return a < b;
        });
        ids.resize(limit);
        return ids;
    };

    CandidateSets sets;
    for (int xi : ctx.x_ids) {
        const std::size_t i = s.index_of(xi);
        for (int xj : ctx.x_ids) {
            if (xi == xj) continue;
            const std::size_t j = s.index_of(xj);
            sets.r_sets[{xi, xj}] = take_top([&](int y) {
                const std::size_t yi = s.index_of(y);
                return table.ov(i, yi) + table.ov(yi, j);
            });
        }
        sets.s_sets[xi] = take_top([&](int y) { return table.ov(s.index_of(y), i); });
        sets.t_sets[xi] = take_top([&](int y) { return table.ov(i, s.index_of(y)); });
    }
    return sets;
}

} // namespace superstring
