#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superstring/strings.hpp"

namespace superstring {

/// Complete undirected graph over the inclusion-maximal distinct strings of a
/// collection; the weight of {x,y} is the larger of the two directed overlaps.
class WeightedOverlapGraph {
public:
    std::size_t size() const { return ids_.size(); }
    const std::vector<int>& vertex_ids() const { return ids_; }
    std::int64_t weight(std::size_t i, std::size_t j) const;
    std::int64_t directed_overlap(std::size_t i, std::size_t j) const;

private:
    friend WeightedOverlapGraph build_weighted_graph(const WeightedCollection&);
    friend WeightedOverlapGraph graph_from_overlaps(std::vector<int>,
                                                    std::vector<std::int64_t>);
    std::vector<int> ids_;
    std::vector<std::int64_t> ov_;  // directed overlaps by index
};

WeightedOverlapGraph build_weighted_graph(const WeightedCollection& s);

/// Builds a graph straight from a matrix of directed overlap lengths (row i,
/// column j = overlap of i onto j); synthetic instrument for matching tests.
WeightedOverlapGraph graph_from_overlaps(std::vector<int> ids,
                                         std::vector<std::int64_t> directed);

struct MatchedEdge {
    int id_a = 0;  // lower id
    int id_b = 0;
    std::int64_t weight = 0;
    int from_id = 0;  // orientation attaining the weight
    int to_id = 0;
};

struct MatchingResult {
    std::vector<MatchedEdge> edges;
    std::int64_t total_weight = 0;  // this is mu(S)
};

/// Exact maximum-weight matching (general graphs, blossom method). When both
/// orientations of a pair attain its weight the lower id points to the higher.
MatchingResult max_weight_matching(const WeightedOverlapGraph& g);

/// Superstring built from a matching: each matched pair merged in its
/// weight-attaining orientation, leftovers folded afterwards. Its compression
/// is at least the matching weight.
std::string matching_superstring(const WeightedCollection& s,
                                 const MatchingResult& m);

/// Baseline: repeatedly merge the ordered pair with the largest overlap.
std::string greedy_superstring(const WeightedCollection& s);

} // namespace superstring
