#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superstring/errors.hpp"
#include "superstring/exact.hpp"
#include "test_util.hpp"

using namespace superstring;
using test_util::make_collection;

TEST_CASE("subset DP solves the worked examples") {
    CHECK(shortest_superstring_dp(make_collection({"abc", "bcd", "cde"})).length == 5);
    CHECK(shortest_superstring_dp(make_collection({"a"})).length == 1);
    CHECK(shortest_superstring_dp(make_collection({"ab", "ba"})).length == 3);
}

TEST_CASE("permutation brute force agrees on the examples") {
    CHECK(shortest_superstring_bruteforce(make_collection({"abc", "bcd", "cde"})).length == 5);
    CHECK(shortest_superstring_bruteforce(make_collection({"x", "y"})).length == 2);
    CHECK(shortest_superstring_bruteforce(make_collection({"aaa", "aa"})).length == 3);
}

TEST_CASE("decision wrapper compares against the optimum") {
    const auto s = make_collection({"abc", "bcd", "cde"});
    CHECK(decide(s, 5));
    CHECK_FALSE(decide(s, 4));
    CHECK_FALSE(decide(make_collection({"ab"}), 0));
    CHECK_THROWS_AS(decide(s, -1), input_error);
}

TEST_CASE("ties break to the lexicographically smallest order") {
    const ExactResult r = shortest_superstring_dp(make_collection({"ab", "ba"}));
    CHECK(r.length == 3);
    CHECK(r.order == std::vector<int>{0, 1});
    CHECK(r.superstring == "aba");
}

TEST_CASE("capacity guards fire") {
    WeightedCollection big;
    for (int i = 0; i < 11; ++i)
        big.append(std::string(1, static_cast<char>('a' + i)) + "x" +
                   std::string(1, static_cast<char>('a' + i)));
    CHECK_THROWS_AS(shortest_superstring_dp(big, ExactOptions{8}), capacity_error);
    CHECK_THROWS_AS(shortest_superstring_bruteforce(big, 9), capacity_error);
    CHECK_THROWS_AS(shortest_superstring_dp(WeightedCollection{}), input_error);
}

TEST_CASE("DP equals brute force on random instances") {
    std::mt19937 rng(2025);
    for (int iter = 0; iter < 80; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const WeightedCollection s = test_util::random_collection(rng, n, 6, 2);
        const ExactResult dp = shortest_superstring_dp(s);
        const ExactResult bf = shortest_superstring_bruteforce(s);
        CAPTURE(iter);
        REQUIRE(dp.length == bf.length);
        REQUIRE(is_superstring_of(s, dp.superstring));
        REQUIRE(dp.length == static_cast<std::int64_t>(dp.superstring.size()));
        REQUIRE(superstring_from_order(dp.order, s) == dp.superstring);
        REQUIRE(dp.length <= s.total_length());
        REQUIRE(dp.length >= s.max_length());
    }
}

TEST_CASE("injecting a duplicate never changes the optimum") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const WeightedCollection s = test_util::random_collection(rng, n, 5, 2);
        const std::int64_t base = shortest_superstring_dp(s).length;
        WeightedCollection with_dup;
        for (const StringItem& it : s.items()) with_dup.append(it.bytes);
        with_dup.append(s.item(rng() % s.size()).bytes);
        CHECK(shortest_superstring_dp(with_dup).length == base);
    }
}
