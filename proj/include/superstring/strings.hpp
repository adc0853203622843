#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace superstring {

/// One string of a collection. Ids are stable and unique within a collection
/// even when the bytes repeat (multiset semantics).
struct StringItem {
    int id = 0;
    std::string bytes;
};

/// A multiset of non-empty byte strings with non-negative integer weights.
/// Items keep strictly increasing ids, so sub-collections formed by dropping
/// items preserve the ids of what remains.
class WeightedCollection {
public:
    WeightedCollection() = default;

    /// Appends a string under the next free id and returns that id.
    int append(std::string bytes, std::int64_t weight = 1);

    /// Appends a string under an explicit id; ids must stay strictly
    /// increasing. Empty strings and negative weights are rejected.
    void append_with_id(int id, std::string bytes, std::int64_t weight = 1);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<StringItem>& items() const { return items_; }
    const StringItem& item(std::size_t index) const;
    const StringItem& by_id(int id) const;
    bool has_id(int id) const { return index_.count(id) != 0; }
    std::size_t index_of(int id) const;

    std::int64_t weight(std::size_t index) const;
    std::int64_t weight_of_id(int id) const { return weight(index_of(id)); }

    std::int64_t total_length() const { return total_length_; }
    std::int64_t total_weight() const { return total_weight_; }
    std::int64_t max_length() const { return max_length_; }

private:
    std::vector<StringItem> items_;
    std::vector<std::int64_t> weights_;
    std::unordered_map<int, std::size_t> index_;
    std::int64_t total_length_ = 0;
    std::int64_t total_weight_ = 0;
    std::int64_t max_length_ = 0;
};

/// True when `needle` occurs in `hay` as a contiguous substring.
bool contains(std::string_view hay, std::string_view needle);

/// The overlap of s and t: the contained string itself when one contains the
/// other, otherwise the longest proper suffix of s that is a prefix of t
/// (possibly empty).
std::string overlap(std::string_view s, std::string_view t);
std::int64_t overlap_length(std::string_view s, std::string_view t);

/// Concatenation with overlap: the container when one string contains the
/// other, otherwise s followed by t with their maximal overlap collapsed
/// once. |merge(s,t)| = |s| + |t| - |overlap(s,t)| in the non-nested case.
std::string merge(std::string_view s, std::string_view t);

/// Pairwise overlap lengths and substring flags for a collection, indexed by
/// item position. The diagonal is deliberately undefined: reading it throws.
class OverlapTable {
public:
    OverlapTable() = default;

    std::size_t size() const { return n_; }
    /// Overlap length of the ordered pair (item i, item j), i != j. Substring
    /// pairs follow the convention ov[i][j] = ov[j][i] = |contained string|.
    std::int64_t ov(std::size_t i, std::size_t j) const;
    /// True when item i is a substring of item j (i != j).
    bool sub(std::size_t i, std::size_t j) const;

private:
    friend OverlapTable build_overlap_table(const WeightedCollection&);
    std::size_t n_ = 0;
    std::vector<std::int64_t> ov_;
    std::vector<std::uint8_t> sub_;
};

/// All pairwise overlaps via one failure-function scan per ordered pair,
/// O(n^2 m) total; substring flags fall out of the same scans.
OverlapTable build_overlap_table(const WeightedCollection& s);

/// Left fold of merge over the items listed by `order`, which must name every
/// id of the collection exactly once. The result contains every item.
std::string superstring_from_order(std::span<const int> order,
                                   const WeightedCollection& s);

bool is_superstring_of(const WeightedCollection& s, std::string_view candidate);

/// Total length of the collection minus |superstring|; throws contract_error
/// when the argument does not actually contain every item.
std::int64_t compression(const WeightedCollection& s, std::string_view superstring);

struct MaximalReduction {
    /// Inclusion-maximal pairwise distinct strings, original ids retained.
    WeightedCollection collection;
    /// Every original id -> the lowest retained id whose string contains it.
    std::unordered_map<int, int> mapped_to;
};

MaximalReduction reduce_to_maximal(const WeightedCollection& s);

} // namespace superstring
