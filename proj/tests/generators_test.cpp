#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "superstring/errors.hpp"
#include "superstring/generators.hpp"
#include "superstring/partial.hpp"
#include "test_util.hpp"

using namespace superstring;

namespace {

DiGraph planted_trail_graph(std::mt19937& rng, int n, int extra_arcs,
                            std::vector<int>* trail_out) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.insert({perm[i], perm[i + 1]});
    for (int tries = 0; tries < 10 * extra_arcs; ++tries) {
        if (static_cast<int>(arcs.size()) >= n - 1 + extra_arcs) break;
        const int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u != v) arcs.insert({u, v});
    }
    const DiGraph g =
        make_digraph(n, std::vector<std::pair<int, int>>(arcs.begin(), arcs.end()));
    if (trail_out) {
        trail_out->clear();
        for (int i = 0; i + 1 < n; ++i) {
            const std::pair<int, int> arc{perm[i], perm[i + 1]};
            const auto it = std::lower_bound(g.arcs.begin(), g.arcs.end(), arc);
            trail_out->push_back(static_cast<int>(it - g.arcs.begin()) + 1);
        }
    }
    return g;
}

} // namespace

TEST_CASE("digraph validation") {
    CHECK_THROWS_AS(make_digraph(2, {{1, 1}}), input_error);
    CHECK_THROWS_AS(make_digraph(2, {{1, 3}}), input_error);
    CHECK_THROWS_AS(make_digraph(2, {{1, 2}, {1, 2}}), input_error);
}

TEST_CASE("trail oracle on hand graphs") {
    CHECK(longest_trail_bruteforce(make_digraph(3, {{1, 2}, {2, 3}, {3, 1}})) == 3);
    CHECK(longest_trail_bruteforce(make_digraph(2, {{1, 2}})) == 1);
    CHECK(longest_trail_bruteforce(make_digraph(3, {})) == 0);
    CHECK_THROWS_AS(longest_trail_bruteforce(make_digraph(3, {{1, 2}, {2, 3}}), 1),
                    capacity_error);
}

TEST_CASE("hamiltonian path oracle on hand graphs") {
    CHECK(hamiltonian_path_bruteforce(make_digraph(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(hamiltonian_path_bruteforce(make_digraph(2, {})));
    CHECK_THROWS_AS(hamiltonian_path_bruteforce(make_digraph(10, {}), 9),
                    capacity_error);

    // every tournament has a Hamiltonian path
    std::mt19937 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<std::pair<int, int>> arcs;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v)
                arcs.emplace_back(rng() % 2 ? std::pair{u, v} : std::pair{v, u});
        CHECK(hamiltonian_path_bruteforce(make_digraph(5, std::move(arcs))));
    }
}

TEST_CASE("the long-trail reduction mirrors Hamiltonian paths") {
    SUBCASE("single arc") {
        const LongTrailReduction red =
            hampath_to_longtrail(make_digraph(2, {{1, 2}}));
        CHECK(red.graph.n == 6);
        CHECK(red.graph.arcs.size() == 7);
        CHECK(red.ell == 5);
        CHECK(longest_trail_bruteforce(red.graph, 32) == 5);
    }
    SUBCASE("two isolated vertices") {
        const LongTrailReduction red = hampath_to_longtrail(make_digraph(2, {}));
        CHECK(longest_trail_bruteforce(red.graph, 32) < red.ell);
    }
    SUBCASE("directed path on three vertices") {
        const LongTrailReduction red =
            hampath_to_longtrail(make_digraph(3, {{1, 2}, {2, 3}}));
        CHECK(red.ell == 7);
        CHECK(longest_trail_bruteforce(red.graph, 32) >= 7);
    }
    SUBCASE("random equivalence") {
        std::mt19937 rng(117);
        for (int iter = 0; iter < 150; ++iter) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const DiGraph g = test_util::random_digraph(rng, n, 35);
            const LongTrailReduction red = hampath_to_longtrail(g);
            const bool has_path = hamiltonian_path_bruteforce(g);
            const bool has_trail = longest_trail_bruteforce(red.graph, 40) >= red.ell;
            CAPTURE(iter);
            REQUIRE(has_trail == has_path);
        }
    }
}

TEST_CASE("cross-composition parameters and overlaps") {
    SUBCASE("formula evaluation") {
        const DiGraph g = make_digraph(4, {{1, 2}, {2, 3}});
        const std::vector<DiGraph> ensemble{g};
        const PartialInstance inst = longtrail_to_partial(ensemble, 2);
        CHECK(inst.r == 4);
        CHECK(inst.k == 2);
        CHECK(inst.ell_prime == 60);
        for (const StringItem& it : inst.strings.items())
            CHECK(it.bytes.size() == 44);
        CHECK(verify_construction(inst).all_pass());
    }
    SUBCASE("bad targets are rejected") {
        const std::vector<DiGraph> ensemble{make_digraph(3, {{1, 2}})};
        CHECK_THROWS_AS(longtrail_to_partial(ensemble, 3), input_error);
        CHECK_THROWS_AS(longtrail_to_partial(ensemble, 0), input_error);
        CHECK_THROWS_AS(longtrail_to_partial({}, 1), input_error);
    }
    SUBCASE("composable pairs overlap in exactly 7r") {
        const DiGraph g = make_digraph(4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}});
        const std::vector<DiGraph> ensemble{g, make_digraph(4, {{1, 2}, {3, 4}})};
        const PartialInstance inst = longtrail_to_partial(ensemble, 2);
        const VerifyReport report = verify_construction(inst);
        CAPTURE(report.checks.size());
        CHECK(report.all_pass());
        for (std::size_t a = 0; a < inst.strings.size(); ++a)
            for (std::size_t b = 0; b < inst.strings.size(); ++b) {
                if (a == b) continue;
                const std::int64_t ov = overlap_length(inst.strings.item(a).bytes,
                                                       inst.strings.item(b).bytes);
                const bool composable =
                    inst.origin[a].first == inst.origin[b].first &&
                    inst.origin[a].second.second == inst.origin[b].second.first;
                CHECK(ov <= 7 * inst.r);
                CHECK((ov == 7 * inst.r) == composable);
            }
    }
    SUBCASE("end to end against the trail oracles") {
        std::mt19937 rng(2718);
        PartialOptions det;
        det.mode = SolveMode::deterministic;
        det.budget = std::int64_t{1} << 22;
        for (int iter = 0; iter < 12; ++iter) {
            const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
            const int t = 1 + static_cast<int>(rng() % 3);
            const std::int64_t ell =
                1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            std::vector<DiGraph> ensemble;
            bool any_trail = false;
            for (int i = 0; i < t; ++i) {
                ensemble.push_back(test_util::random_digraph(rng, n, 40));
                if (longest_trail_bruteforce(ensemble.back(), 25) >= ell)
                    any_trail = true;
            }
            const PartialInstance inst = longtrail_to_partial(ensemble, ell);
            const bool got =
                inst.k > static_cast<std::int64_t>(inst.strings.size())
                    ? false
                    : solve_partial(inst.strings, static_cast<int>(inst.k),
                                    inst.ell_prime, det)
                          .found;
            CAPTURE(iter);
            REQUIRE(got == any_trail);
        }
    }
}

TEST_CASE("below-matching construction") {
    std::mt19937 rng(999);
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(longtrail_to_below_matching(make_digraph(63, {{1, 2}})),
                        input_error);
        CHECK_THROWS_AS(longtrail_to_below_matching(make_digraph(64, {})),
                        input_error);
    }
    SUBCASE("formulas at n = 64") {
        const DiGraph g = make_digraph(64, {{1, 2}, {2, 3}, {5, 9}});
        const BelowMatchingInstance inst = longtrail_to_below_matching(g);
        CHECK(inst.p == 21);
        CHECK(inst.q == 21);
        CHECK(inst.mu == 124 * 3);
        CHECK(inst.ell_prime == 374 * 3 - 124 * 3 - 1);
        for (const StringItem& it : inst.strings.items())
            CHECK(it.bytes.size() == 187);
    }
    SUBCASE("claimed overlap properties hold exactly") {
        const DiGraph g = test_util::random_digraph(rng, 64, 1);
        if (g.arcs.empty()) return;
        const BelowMatchingInstance inst = longtrail_to_below_matching(g);
        const auto m = static_cast<std::int64_t>(g.arcs.size());
        for (std::int64_t h = 1; h <= m; ++h) {
            const std::string& sh = inst.strings.by_id(static_cast<int>(2 * (h - 1))).bytes;
            const std::string& shp =
                inst.strings.by_id(static_cast<int>(2 * (h - 1) + 1)).bytes;
            CHECK(overlap_length(sh, shp) == 2 * (64 - 2));
            CHECK(overlap_length(shp, sh) == 64 - 1);
        }
        CHECK(verify_construction(inst).all_pass());
    }
    SUBCASE("planted trail reaches exactly ell_prime") {
        for (int iter = 0; iter < 3; ++iter) {
            std::vector<int> trail;
            const DiGraph g = planted_trail_graph(rng, 64, 5, &trail);
            REQUIRE(trail.size() == 63);
            const BelowMatchingInstance inst = longtrail_to_below_matching(g);
            const std::string witness = planted_trail_superstring(inst, trail);
            CAPTURE(iter);
            REQUIRE(static_cast<std::int64_t>(witness.size()) == inst.ell_prime);
            REQUIRE(is_superstring_of(inst.strings, witness));
            REQUIRE(compression(inst.strings, witness) == inst.mu + 1);
        }
    }
    SUBCASE("mutations are caught") {
        const DiGraph g = make_digraph(64, {{1, 2}, {3, 4}});
        BelowMatchingInstance inst = longtrail_to_below_matching(g);
        WeightedCollection mutated;
        for (const StringItem& it : inst.strings.items()) {
            std::string bytes = it.bytes;
            if (it.id == 1) bytes[40] = bytes[40] == '0' ? '1' : '0';
            mutated.append_with_id(it.id, bytes, 1);
        }
        inst.strings = mutated;
        CHECK_FALSE(verify_construction(inst).all_pass());
    }
    SUBCASE("invalid trails are rejected") {
        const DiGraph g = make_digraph(64, {{1, 2}, {3, 4}});
        const BelowMatchingInstance inst = longtrail_to_below_matching(g);
        const std::vector<int> not_composing{1, 2};
        CHECK_THROWS_AS(planted_trail_superstring(inst, not_composing), input_error);
        const std::vector<int> repeated{1, 1};
        CHECK_THROWS_AS(planted_trail_superstring(inst, repeated), input_error);
    }
}
