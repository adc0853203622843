#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superstring/strings.hpp"

namespace superstring {

/// Simple directed graph: 1-based vertices, no loops, no parallel arcs.
struct DiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted ascending
};

DiGraph make_digraph(int n, std::vector<std::pair<int, int>> arcs);

struct LongTrailReduction {
    DiGraph graph;        // the derived graph G'
    std::int64_t ell = 0; // |V(G')| - 1
};

/// Hamiltonian Path -> Long Trail. Vertex v of the input becomes the gadget
/// pair 2v-1 (in side) and 2v (out side); the source is 2n+1 and the sink
/// 2n+2. The output has a trail of length >= ell iff the input has a
/// Hamiltonian path.
LongTrailReduction hampath_to_longtrail(const DiGraph& g);

/// Instance of Partial Superstring produced from an ensemble of Long Trail
/// instances sharing the vertex count: one string per arc, answered yes iff
/// some member graph has a trail of length ell.
struct PartialInstance {
    WeightedCollection strings;  // unit weights, binary alphabet
    std::int64_t k = 0;
    std::int64_t ell_prime = 0;
    std::int64_t r = 0;      // encoding block width
    int n = 0;               // shared vertex count
    std::int64_t ell = 0;    // shared trail target
    std::vector<DiGraph> graphs;
    /// per string: 1-based graph index and the arc it encodes
    std::vector<std::pair<int, std::pair<int, int>>> origin;
};

PartialInstance longtrail_to_partial(std::span<const DiGraph> graphs,
                                     std::int64_t ell);

/// Shortest Superstring instance one symbol below the matching bound:
/// two strings per arc; answered yes iff the graph has a trail of length n-1.
struct BelowMatchingInstance {
    WeightedCollection strings;  // ids 2(h-1) and 2(h-1)+1 for arc h
    std::int64_t ell_prime = 0;  // total length - mu - 1
    std::int64_t mu = 0;         // 2(n-2)m
    int n = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    DiGraph graph;
};

BelowMatchingInstance longtrail_to_below_matching(const DiGraph& g);

/// The witness superstring assembled in the construction's own order from a
/// trail given as 1-based arc indices; for a trail of length n-1 its length
/// is exactly ell_prime.
std::string planted_trail_superstring(const BelowMatchingInstance& inst,
                                      std::span<const int> trail_arcs);

/// Exact longest trail length by arc-marking DFS from every vertex.
std::int64_t longest_trail_bruteforce(const DiGraph& g, std::int64_t budget = 18);

/// Exact Hamiltonian path test by permutation enumeration, n <= max_vertices.
bool hamiltonian_path_bruteforce(const DiGraph& g, int max_vertices = 9);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Recomputes every overlap the construction makes claims about and checks
/// the claimed values; failures become report entries, not errors.
VerifyReport verify_construction(const PartialInstance& inst);
VerifyReport verify_construction(const BelowMatchingInstance& inst);

} // namespace superstring
