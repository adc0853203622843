#include "superstring/strings.hpp"

#include <algorithm>
#include <limits>

#include "superstring/errors.hpp"

namespace superstring {
namespace {

constexpr std::int64_t kLengthCap = std::int64_t{1} << 62;

std::vector<int> failure_function(std::string_view p) {
    std::vector<int> fail(p.size(), 0);
    for (std::size_t i = 1; i < p.size(); ++i) {
        int j = fail[i - 1];
        while (j > 0 && p[i] != p[j]) j = fail[j - 1];
        if (p[i] == p[j]) ++j;
        fail[i] = j;
    }
    return fail;
}

struct ScanResult {
    int border = 0;  // longest suffix of the text that is a proper prefix of the pattern
    bool occurs = false;
};

// Runs the KMP automaton of `pattern` over `text`. Whenever a full match
// completes the state drops through the failure link, so the final state is
// always < |pattern| and full occurrences are reported separately.
ScanResult kmp_scan(std::string_view text, std::string_view pattern,
                    const std::vector<int>& fail) {
    ScanResult res;
    const int m = static_cast<int>(pattern.size());
    int j = 0;
    for (char c : text) {
        while (j > 0 && pattern[j] != c) j = fail[j - 1];
        if (pattern[j] == c) ++j;
        if (j == m) {
            res.occurs = true;
            j = fail[j - 1];
        }
    }
    res.border = j;
    return res;
}

} // namespace

int WeightedCollection::append(std::string bytes, std::int64_t weight) {
    const int id = items_.empty() ? 0 : items_.back().id + 1;
    append_with_id(id, std::move(bytes), weight);
    return id;
}

void WeightedCollection::append_with_id(int id, std::string bytes, std::int64_t weight) {
    if (bytes.empty()) throw input_error("empty strings are not allowed");
    if (weight < 0) throw input_error("negative weight");
    if (!items_.empty() && id <= items_.back().id)
        throw input_error("item ids must be strictly increasing");
    if (total_length_ > kLengthCap - static_cast<std::int64_t>(bytes.size()))
        throw input_error("total collection length overflows");
    if (total_weight_ > kLengthCap - weight)
        throw input_error("total collection weight overflows");
    total_length_ += static_cast<std::int64_t>(bytes.size());
    total_weight_ += weight;
    max_length_ = std::max(max_length_, static_cast<std::int64_t>(bytes.size()));
    index_.emplace(id, items_.size());
    items_.push_back(StringItem{id, std::move(bytes)});
    weights_.push_back(weight);
}

const StringItem& WeightedCollection::item(std::size_t index) const {
    if (index >= items_.size()) throw input_error("item index out of range");
    return items_[index];
}

const StringItem& WeightedCollection::by_id(int id) const {
    return items_[index_of(id)];
}

std::size_t WeightedCollection::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw input_error("unknown item id");
    return it->second;
}

std::int64_t WeightedCollection::weight(std::size_t index) const {
    if (index >= weights_.size()) throw input_error("item index out of range");
    return weights_[index];
}

bool contains(std::string_view hay, std::string_view needle) {
    if (needle.empty()) return true;
    if (needle.size() > hay.size()) return false;
    return kmp_scan(hay, needle, failure_function(needle)).occurs;
}

std::int64_t overlap_length(std::string_view s, std::string_view t) {
    if (s.empty() || t.empty()) return 0;
    const auto fail_t = failure_function(t);
    const ScanResult st = kmp_scan(s, t, fail_t);  // border(s->t) and t-in-s
    if (st.occurs) return static_cast<std::int64_t>(t.size());
    if (s.size() <= t.size() && kmp_scan(t, s, failure_function(s)).occurs)
        return static_cast<std::int64_t>(s.size());
    return st.border;
}

std::string overlap(std::string_view s, std::string_view t) {
    if (s.empty()) return std::string();
    if (t.empty()) return std::string();
    const auto fail_t = failure_function(t);
    const ScanResult st = kmp_scan(s, t, fail_t);
    if (st.occurs) return std::string(t);
    if (s.size() <= t.size() && kmp_scan(t, s, failure_function(s)).occurs)
        return std::string(s);
    return std::string(t.substr(0, static_cast<std::size_t>(st.border)));
}

std::string merge(std::string_view s, std::string_view t) {
    if (s.empty()) return std::string(t);
    if (t.empty()) return std::string(s);
    const auto fail_t = failure_function(t);
    const ScanResult st = kmp_scan(s, t, fail_t);
    if (st.occurs) return std::string(s);  // t inside s
    if (s.size() <= t.size() && kmp_scan(t, s, failure_function(s)).occurs)
        return std::string(t);  // s inside t
    std::string out;
    out.reserve(s.size() + t.size() - static_cast<std::size_t>(st.border));
    out.append(s);
    out.append(t.substr(static_cast<std::size_t>(st.border)));
    return out;
}

std::int64_t OverlapTable::ov(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw input_error("overlap table index out of range");
    if (i == j) throw contract_error("overlap table diagonal is undefined");
    return ov_[i * n_ + j];
}

bool OverlapTable::sub(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw input_error("overlap table index out of range");
    if (i == j) throw contract_error("overlap table diagonal is undefined");
    return sub_[i * n_ + j] != 0;
}

OverlapTable build_overlap_table(const WeightedCollection& s) {
    const std::size_t n = s.size();
    OverlapTable table;
    table.n_ = n;
    table.ov_.assign(n * n, -1);
    table.sub_.assign(n * n, 0);

    std::vector<std::vector<int>> fails;
    fails.reserve(n);
    for (std::size_t i = 0; i < n; ++i) fails.push_back(failure_function(s.item(i).bytes));

    // raw borders first; occurrences give the substring flags
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& text = s.item(i).bytes;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const ScanResult r = kmp_scan(text, s.item(j).bytes, fails[j]);
            table.ov_[i * n + j] = r.border;
            if (r.occurs) table.sub_[j * n + i] = 1;  // pattern j occurs inside text i
        }
    }
    // substring convention: overlap(s, s') = s when s is contained in s'
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!table.sub_[i * n + j] && !table.sub_[j * n + i]) continue;
            const std::int64_t contained =
                std::min(static_cast<std::int64_t>(s.item(i).bytes.size()),
                         static_cast<std::int64_t>(s.item(j).bytes.size()));
            table.ov_[i * n + j] = contained;
            table.ov_[j * n + i] = contained;
        }
    return table;
}

std::string superstring_from_order(std::span<const int> order,
                                   const WeightedCollection& s) {
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected;
    expected.reserve(s.size());
    for (const StringItem& it : s.items()) expected.push_back(it.id);
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
        throw input_error("order must list each item id exactly once");

    std::string acc;
    for (int id : order) acc = merge(acc, s.by_id(id).bytes);
    return acc;
}

bool is_superstring_of(const WeightedCollection& s, std::string_view candidate) {
    for (const StringItem& it : s.items())
        if (!contains(candidate, it.bytes)) return false;
    return true;
}

std::int64_t compression(const WeightedCollection& s, std::string_view superstring) {
    if (!is_superstring_of(s, superstring))
        throw contract_error("compression requires a superstring of the collection");
    return s.total_length() - static_cast<std::int64_t>(superstring.size());
}

MaximalReduction reduce_to_maximal(const WeightedCollection& s) {
    const std::size_t n = s.size();
    const OverlapTable table = build_overlap_table(s);

    // Retain an item unless it sits inside another item, where equal
    // duplicates count as contained in the copy with the lowest id.
    std::vector<bool> retained(n, true);
    for (std::size_t i = 0; i < n && n > 1; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !table.sub(i, j)) continue;
            const bool duplicate = s.item(i).bytes == s.item(j).bytes;
            if (!duplicate || s.item(j).id < s.item(i).id) {
                retained[i] = false;
                break;
            }
        }
    }

    MaximalReduction out;
    for (std::size_t i = 0; i < n; ++i)
        if (retained[i])
            out.collection.append_with_id(s.item(i).id, s.item(i).bytes, s.weight(i));
    for (std::size_t i = 0; i < n; ++i) {
        if (retained[i]) {
            out.mapped_to.emplace(s.item(i).id, s.item(i).id);
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (retained[j] && table.sub(i, j)) {  // lowest retained id wins: ids ascend with j
                out.mapped_to.emplace(s.item(i).id, s.item(j).id);
                break;
            }
        }
    }
    return out;
}

} // namespace superstring
