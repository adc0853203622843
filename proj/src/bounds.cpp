#include "superstring/bounds.hpp"

#include <algorithm>
#include <set>

#include "blossom.hpp"
#include "superstring/errors.hpp"

namespace superstring {

std::int64_t WeightedOverlapGraph::weight(std::size_t i, std::size_t j) const {
    return std::max(directed_overlap(i, j), directed_overlap(j, i));
}

std::int64_t WeightedOverlapGraph::directed_overlap(std::size_t i,
                                                    std::size_t j) const {
    if (i >= ids_.size() || j >= ids_.size())
        throw input_error("overlap graph index out of range");
    if (i == j) throw contract_error("overlap graph diagonal is undefined");
    return ov_[i * ids_.size() + j];
}

WeightedOverlapGraph build_weighted_graph(const WeightedCollection& s) {
    const MaximalReduction red = reduce_to_maximal(s);
    const WeightedCollection& m = red.collection;
    const std::size_t n = m.size();
    const OverlapTable table = build_overlap_table(m);

    WeightedOverlapGraph g;
    for (const StringItem& it : m.items()) g.ids_.push_back(it.id);
    g.ov_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) g.ov_[i * n + j] = table.ov(i, j);
    return g;
}

WeightedOverlapGraph graph_from_overlaps(std::vector<int> ids,
                                         std::vector<std::int64_t> directed) {
    const std::size_t n = ids.size();
    if (directed.size() != n * n)
        throw input_error("directed overlap matrix has the wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) directed[i * n + j] = -1;
            else if (directed[i * n + j] < 0)
                throw input_error("overlap lengths must be non-negative");
        }
    WeightedOverlapGraph g;
    g.ids_ = std::move(ids);
    g.ov_ = std::move(directed);
    return g;
}

MatchingResult max_weight_matching(const WeightedOverlapGraph& g) {
    const int n = static_cast<int>(g.size());
    MatchingResult result;
    if (n < 2) return result;

    WeightedBlossom blossom(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t w = g.weight(static_cast<std::size_t>(i),
                                            static_cast<std::size_t>(j));
            if (w > 0) blossom.set_weight(i + 1, j + 1, w);
        }
    result.total_weight = blossom.solve();

    for (int i = 0; i < n; ++i) {
        const int mate = blossom.mate(i + 1);
        if (mate == 0 || mate <= i) continue;
        const std::size_t a = static_cast<std::size_t>(i);
        const std::size_t b = static_cast<std::size_t>(mate - 1);
        MatchedEdge e;
        e.id_a = g.vertex_ids()[a];
        e.id_b = g.vertex_ids()[b];
        e.weight = g.weight(a, b);
        if (g.directed_overlap(a, b) >= g.directed_overlap(b, a)) {
            e.from_id = e.id_a;
            e.to_id = e.id_b;
        } else {
            e.from_id = e.id_b;
            e.to_id = e.id_a;
        }
        result.edges.push_back(e);
    }
    std::sort(result.edges.begin(), result.edges.end(),
              [](const MatchedEdge& x, const MatchedEdge& y) {
                  return x.id_a < y.id_a;
              });
    return result;
}

std::string matching_superstring(const WeightedCollection& s,
                                 const MatchingResult& m) {
    const MaximalReduction red = reduce_to_maximal(s);
    const WeightedCollection& maximal = red.collection;

    std::set<int> used;
    for (const MatchedEdge& e : m.edges) {
        if (!maximal.has_id(e.from_id) || !maximal.has_id(e.to_id))
            throw input_error("matching names a string outside the graph");
        if (!used.insert(e.from_id).second || !used.insert(e.to_id).second)
            throw input_error("matching edges are not disjoint");
    }

    std::string acc;
    for (const MatchedEdge& e : m.edges) {
        acc = merge(acc, maximal.by_id(e.from_id).bytes);
        acc = merge(acc, maximal.by_id(e.to_id).bytes);
    }
    for (const StringItem& it : maximal.items())
        if (!used.count(it.id)) acc = merge(acc, it.bytes);
    return acc;
}

std::string greedy_superstring(const WeightedCollection& s) {
    const MaximalReduction red = reduce_to_maximal(s);
    struct Pool {
        int repr_id;
        std::string bytes;
    };
    std::vector<Pool> pool;
    for (const StringItem& it : red.collection.items())
        pool.push_back({it.id, it.bytes});
    if (pool.empty()) return std::string();

    while (pool.size() > 1) {
        std::size_t best_i = 0, best_j = 1;
        std::int64_t best = -1;
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if (i == j) continue;
                // merging can create containments mid-run; overlap_length
                // reports |contained| for those, so greedy absorbs them first
                const std::int64_t ov = overlap_length(pool[i].bytes, pool[j].bytes);
                if (ov > best) {
                    best = ov;
                    best_i = i;
                    best_j = j;
                }
            }
        Pool merged{std::min(pool[best_i].repr_id, pool[best_j].repr_id),
                    merge(pool[best_i].bytes, pool[best_j].bytes)};
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::max(best_i, best_j)));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(best_i, best_j)));
        pool.push_back(merged);
        std::sort(pool.begin(), pool.end(),
                  [](const Pool& a, const Pool& b) { return a.repr_id < b.repr_id; });
    }
    return pool.front().bytes;
}

} // namespace superstring
