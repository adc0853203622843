#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "superstring/generators.hpp"
#include "superstring/strings.hpp"

// Test-only oracles, deliberately naive and independent of the production
// failure-function machinery.
namespace test_util {

inline bool naive_contains(std::string_view hay, std::string_view needle) {
    if (needle.empty()) return true;
    if (needle.size() > hay.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (hay.compare(i, needle.size(), needle) == 0) return true;
    return false;
}

inline std::int64_t naive_overlap_length(std::string_view s, std::string_view t) {
    if (naive_contains(s, t)) return static_cast<std::int64_t>(t.size());
    if (naive_contains(t, s)) return static_cast<std::int64_t>(s.size());
    for (std::size_t len = std::min(s.size(), t.size()); len > 0; --len)
        if (s.substr(s.size() - len) == t.substr(0, len))
            return static_cast<std::int64_t>(len);
    return 0;
}

inline std::string naive_merge(std::string_view s, std::string_view t) {
    if (naive_contains(s, t)) return std::string(s);
    if (naive_contains(t, s)) return std::string(t);
    const auto ov = static_cast<std::size_t>(naive_overlap_length(s, t));
    return std::string(s) + std::string(t.substr(ov));
}

inline std::string naive_fold(const std::vector<std::string>& strings) {
    std::string acc;
    for (const std::string& s : strings) acc = naive_merge(acc, s);
    return acc;
}

inline superstring::WeightedCollection make_collection(
    const std::vector<std::string>& strings,
    const std::vector<std::int64_t>& weights = {}) {
    superstring::WeightedCollection s;
    for (std::size_t i = 0; i < strings.size(); ++i)
        s.append(strings[i], weights.empty() ? 1 : weights.at(i));
    return s;
}

inline std::string random_string(std::mt19937& rng, int max_len, int alphabet,
                                 int min_len = 1) {
    const int len = min_len + static_cast<int>(
                                  rng() % static_cast<unsigned>(max_len - min_len + 1));
    std::string s(static_cast<std::size_t>(len), 'a');
    for (char& c : s) c = static_cast<char>('a' + rng() % static_cast<unsigned>(alphabet));
    return s;
}

inline superstring::WeightedCollection random_collection(std::mt19937& rng, int n,
                                                         int max_len, int alphabet,
                                                         int min_len = 1) {
    superstring::WeightedCollection s;
    for (int i = 0; i < n; ++i) s.append(random_string(rng, max_len, alphabet, min_len));
    return s;
}

inline superstring::DiGraph random_digraph(std::mt19937& rng, int n, int percent) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v && static_cast<int>(rng() % 100) < percent)
                arcs.emplace_back(u, v);
    return superstring::make_digraph(n, std::move(arcs));
}

// max-weight matching by bottom-up subset DP (weights by index pair)
inline std::int64_t matching_dp_oracle(
    int n, const std::function<std::int64_t(int, int)>& weight) {
    std::vector<std::int64_t> dp(std::size_t{1} << n, 0);
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        const int v = std::countr_zero(mask);
        std::int64_t best = dp[mask & (mask - 1)];
        for (int u = v + 1; u < n; ++u)
            if ((mask >> u & 1) && weight(v, u) > 0)
                best = std::max(best, weight(v, u) +
                                          dp[mask & ~(std::size_t{1} << v) &
                                             ~(std::size_t{1} << u)]);
        dp[mask] = best;
    }
    return dp.back();
}

// plain recursive enumeration of all matchings, no memoisation
inline std::int64_t matching_enum_oracle(
    int n, const std::function<std::int64_t(int, int)>& weight, unsigned used = 0,
    int v = 0) {
    if (v == n) return 0;
    if (used >> v & 1) return matching_enum_oracle(n, weight, used, v + 1);
    std::int64_t best = matching_enum_oracle(n, weight, used | (1u << v), v + 1);
    for (int u = v + 1; u < n; ++u) {
        if ((used >> u & 1) || weight(v, u) <= 0) continue;
        best = std::max(best, weight(v, u) +
                                  matching_enum_oracle(
                                      n, weight, used | (1u << v) | (1u << u), v + 1));
    }
    return best;
}

} // namespace test_util
