#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superstring/strings.hpp"

namespace superstring {

/// One reduction-rule firing. `ids` names the affected strings; `detail`
/// carries rule-specific integers (deleted length, matching size, h, ...),
/// enough to replay the trace mechanically.
struct RuleFiring {
    std::string rule;  // "rule1" .. "rule6"
    std::vector<int> ids;
    std::int64_t ell_after = 0;
    std::int64_t r_after = 0;
    std::map<std::string, std::int64_t> detail;
};

struct KernelOutcome {
    enum class Kind { decided, reduced };
    Kind kind = Kind::decided;
    bool answer = false;         // meaningful for decided outcomes
    std::string decided_by;      // rule that decided
    WeightedCollection reduced;  // meaningful for reduced outcomes
    std::int64_t reduced_ell = 0;
    std::vector<RuleFiring> trace;
};

/// Compression-parameterized kernel: applies the six reduction rules and
/// either decides the instance or returns an equivalent one whose size is
/// bounded by a polynomial in r = total length - ell.
KernelOutcome kernelize(const WeightedCollection& s, std::int64_t ell);

/// Conflict graph over a set of strings: two strings are adjacent iff some
/// directed overlap between them is nonzero. Holds a greedily chosen maximal
/// matching, its endpoint set X (a vertex cover) and the complement Y (an
/// independent set); both facts are checked at construction.
struct MatchingContext {
    std::vector<int> vertex_ids;
    std::vector<std::pair<int, int>> edges;     // id pairs, lo < hi
    std::vector<std::pair<int, int>> matching;  // subset of edges
    std::vector<int> x_ids;                     // matched endpoints, ascending
    std::vector<int> y_ids;                     // the rest, ascending
};

MatchingContext build_conflict_graph(const WeightedCollection& s);

/// The candidate families of the kernel construction. For each ordered pair
/// (xi, xj) the Y strings are ranked by |ov(xi,y)| + |ov(y,xj)|; the S_i rank
/// by |ov(y,xi)| and the T_i by |ov(xi,y)|. Each family keeps the first
/// min(2h, |Y|) entries, ties broken by ascending id.
struct CandidateSets {
    std::map<std::pair<int, int>, std::vector<int>> r_sets;
    std::map<int, std::vector<int>> s_sets;
    std::map<int, std::vector<int>> t_sets;
};

CandidateSets candidate_sets(const MatchingContext& ctx,
                             const WeightedCollection& s);

} // namespace superstring
