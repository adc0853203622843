#include "superstring/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superstring/bounds.hpp"
#include "superstring/errors.hpp"

namespace superstring {
namespace {

int floor_log2(std::int64_t v) {
    return std::bit_width(static_cast<std::uint64_t>(v)) - 1;
}

// Fixed-width big-endian binary encoding over {'0','1'}.
std::string encode_binary(std::int64_t value, std::int64_t width) {
    if (value < 0 || width < 1 || (width < 63 && value >= (std::int64_t{1} << width)))
        throw std::logic_error("binary encoding does not fit its width");
    std::string out(static_cast<std::size_t>(width), '0');
    for (std::int64_t bit = 0; bit < width; ++bit)
        if (value >> bit & 1) out[static_cast<std::size_t>(width - 1 - bit)] = '1';
    return out;
}

std::string arc_to_string(int u, int v) {
    std::ostringstream os;
    os << "(" << u << "," << v << ")";
    return os.str();
}

} // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

DiGraph make_digraph(int n, std::vector<std::pair<int, int>> arcs) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto [u, v] = arcs[i];
        if (u < 1 || u > n || v < 1 || v > n)
            throw input_error("arc endpoint out of range");
        if (u == v) throw input_error("loops are not allowed");
        if (i > 0 && arcs[i] == arcs[i - 1])
            throw input_error("duplicate arcs are not allowed");
    }
    return DiGraph{n, std::move(arcs)};
}

LongTrailReduction hampath_to_longtrail(const DiGraph& g) {
    const int n = g.n;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(2 * n) + g.arcs.size() + 2);
    const int source = 2 * n + 1;
    const int sink = 2 * n + 2;
    for (int v = 1; v <= n; ++v) {
        arcs.emplace_back(2 * v - 1, 2 * v);      // in-side to out-side
        arcs.emplace_back(source, 2 * v - 1);
        arcs.emplace_back(2 * v, sink);
    }
    for (const auto& [u, v] : g.arcs) arcs.emplace_back(2 * u, 2 * v - 1);
    LongTrailReduction red;
    red.graph = make_digraph(2 * n + 2, std::move(arcs));
    red.ell = 2 * n + 1;
    return red;
}

PartialInstance longtrail_to_partial(std::span<const DiGraph> graphs,
                                     std::int64_t ell) {
    if (graphs.empty()) throw input_error("the ensemble must not be empty");
    const int n = graphs[0].n;
    for (const DiGraph& g : graphs)
        if (g.n != n) throw input_error("ensemble graphs must share the vertex count");
    if (ell < 1) throw input_error("trail target must be at least 1");
    if (ell >= n)
        throw input_error("trail target must stay below the vertex count");

    const auto t = static_cast<std::int64_t>(graphs.size());
    const std::int64_t r = std::max(floor_log2(n), floor_log2(t)) + 2;
    const std::string ones(static_cast<std::size_t>(r), '1');

    PartialInstance inst;
    inst.n = n;
    inst.ell = ell;
    inst.r = r;
    inst.k = ell;
    inst.ell_prime = 4 * r * ell + 7 * r;
    inst.graphs.assign(graphs.begin(), graphs.end());
    for (std::int64_t gi = 1; gi <= t; ++gi) {
        const std::string xg = encode_binary(gi, r);
        for (const auto& [p, q] : graphs[static_cast<std::size_t>(gi - 1)].arcs) {
            const std::string xp = encode_binary(p, r);
            const std::string xq = encode_binary(q, r);
            std::string se;
            se.reserve(static_cast<std::size_t>(11 * r));
            se.append(xg).append(ones).append(xg).append(xp).append(xg);
            se.append(ones).append(xg).append(xq).append(xg).append(ones).append(xg);
            inst.strings.append(std::move(se));
            inst.origin.emplace_back(static_cast<int>(gi), std::make_pair(p, q));
        }
    }

    // The construction leans on consecutive arcs overlapping in exactly 7r
    // symbols; assert that on the freshly built strings instead of trusting it.
    const std::size_t count = inst.strings.size();
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) continue;
            const std::int64_t ov = overlap_length(inst.strings.item(a).bytes,
                                                   inst.strings.item(b).bytes);
            const bool composable = inst.origin[a].first == inst.origin[b].first &&
                                    inst.origin[a].second.second ==
                                        inst.origin[b].second.first;
            if (ov > 7 * r || (ov == 7 * r) != composable)
                throw std::logic_error("cross-composition overlap self-check failed");
        }
    return inst;
}

BelowMatchingInstance longtrail_to_below_matching(const DiGraph& g) {
    const int n = g.n;
    if (n < 64) throw input_error("the construction requires at least 64 vertices");
    const auto m = static_cast<std::int64_t>(g.arcs.size());
    if (m < 1) throw input_error("the graph must have at least one arc");

    BelowMatchingInstance inst;
    inst.n = n;
    inst.graph = g;
    inst.p = (n - 1 + 2) / 3;  // ceil((n-1)/3)
    inst.q = n - 1 - 2 * inst.p;
    const std::int64_t p = inst.p, q = inst.q;
    if (q - 2 < 62 && m >= (std::int64_t{1} << (q - 2)))
        throw input_error("too many arcs for the index encoding width");

    std::string z(static_cast<std::size_t>(p), '1');
    z[0] = '0';
    const std::string zs(static_cast<std::size_t>(p), '1');

    for (std::int64_t h = 1; h <= m; ++h) {
        const auto [i, j] = g.arcs[static_cast<std::size_t>(h - 1)];
        const std::string yh = encode_binary(2 * h, q);
        const std::string xi = encode_binary(i, q - 1);
        const std::string xj = encode_binary(j, q - 1);
        std::string sh, shp;
        sh.append(z).append(yh).append(zs).append(z).append(xi).append(zs);
        sh.append(z).append(xj).append(zs);
        shp.append(z).append(xi).append(zs).append(z).append(xj).append(zs);
        shp.append(z).append(yh).append(zs);
        inst.strings.append(std::move(sh));   // id 2(h-1)
        inst.strings.append(std::move(shp));  // id 2(h-1)+1
    }
    inst.mu = 2 * static_cast<std::int64_t>(n - 2) * m;
    inst.ell_prime = inst.strings.total_length() - inst.mu - 1;
    return inst;
}

std::string planted_trail_superstring(const BelowMatchingInstance& inst,
                                      std::span<const int> trail_arcs) {
    const auto m = static_cast<std::int64_t>(inst.graph.arcs.size());
    std::set<int> seen;
    for (std::size_t i = 0; i < trail_arcs.size(); ++i) {
        const int h = trail_arcs[i];
        if (h < 1 || h > m) throw input_error("trail names an unknown arc");
        if (!seen.insert(h).second) throw input_error("trail repeats an arc");
        if (i > 0) {
            const auto& prev = inst.graph.arcs[static_cast<std::size_t>(trail_arcs[i - 1] - 1)];
            const auto& curr = inst.graph.arcs[static_cast<std::size_t>(h - 1)];
            if (prev.second != curr.first)
                throw input_error("consecutive trail arcs do not compose");
        }
    }

    std::string acc;
    for (const int h : trail_arcs) {
        acc = merge(acc, inst.strings.by_id(2 * (h - 1) + 1).bytes);  // s'_h
        acc = merge(acc, inst.strings.by_id(2 * (h - 1)).bytes);      // s_h
    }
    for (int h = 1; h <= m; ++h) {
        if (seen.count(h)) continue;
        acc = merge(acc, inst.strings.by_id(2 * (h - 1)).bytes);      // s_h
        acc = merge(acc, inst.strings.by_id(2 * (h - 1) + 1).bytes);  // s'_h
    }
    return acc;
}

std::int64_t longest_trail_bruteforce(const DiGraph& g, std::int64_t budget) {
    const auto m = static_cast<std::int64_t>(g.arcs.size());
    if (m > budget) throw capacity_error("too many arcs for the trail oracle");

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.n) + 1);
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        adj[static_cast<std::size_t>(g.arcs[i].first)].emplace_back(
            static_cast<int>(i), g.arcs[i].second);

    std::vector<char> used(g.arcs.size(), 0);
    std::int64_t best = 0;
    auto dfs = [&](auto&& self, int v, std::int64_t depth) -> void {
        best = std::max(best, depth);
        for (const auto& [ai, w] : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(ai)]) continue;
            used[static_cast<std::size_t>(ai)] = 1;
            self(self, w, depth + 1);
            used[static_cast<std::size_t>(ai)] = 0;
        }
    };
    for (int v = 1; v <= g.n; ++v) dfs(dfs, v, 0);
    return best;
}

bool hamiltonian_path_bruteforce(const DiGraph& g, int max_vertices) {
    if (g.n > max_vertices)
        throw capacity_error("too many vertices for the Hamiltonian path oracle");
    if (g.n <= 1) return true;

    std::vector<std::vector<char>> adj(static_cast<std::size_t>(g.n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(g.n) + 1, 0));
    for (const auto& [u, v] : g.arcs)
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;

    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i)
            ok = adj[static_cast<std::size_t>(perm[i])]
                    [static_cast<std::size_t>(perm[i + 1])] != 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

VerifyReport verify_construction(const PartialInstance& inst) {
    VerifyReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    bool template_ok = true, length_ok = true, alphabet_ok = true;
    std::string template_detail;
    try {
        const PartialInstance fresh =
            longtrail_to_partial(inst.graphs, inst.ell);
        template_ok = fresh.strings.size() == inst.strings.size();
        for (std::size_t i = 0; template_ok && i < inst.strings.size(); ++i)
            template_ok = fresh.strings.item(i).bytes == inst.strings.item(i).bytes;
    } catch (const std::exception& e) {
        template_ok = false;
        template_detail = e.what();
    }
    add("strings_match_template", template_ok, template_detail);

    for (const StringItem& it : inst.strings.items()) {
        if (static_cast<std::int64_t>(it.bytes.size()) != 11 * inst.r) length_ok = false;
        for (char c : it.bytes)
            if (c != '0' && c != '1') alphabet_ok = false;
    }
    add("string_lengths_are_11r", length_ok);
    add("binary_alphabet", alphabet_ok);

    bool cap_ok = true, equality_ok = true;
    std::string witness;
    for (std::size_t a = 0; a < inst.strings.size(); ++a)
        for (std::size_t b = 0; b < inst.strings.size(); ++b) {
            if (a == b) continue;
            const std::int64_t ov = overlap_length(inst.strings.item(a).bytes,
                                                   inst.strings.item(b).bytes);
            const bool composable = inst.origin[a].first == inst.origin[b].first &&
                                    inst.origin[a].second.second ==
                                        inst.origin[b].second.first;
            if (ov > 7 * inst.r) cap_ok = false;
            if ((ov == 7 * inst.r) != composable) {
                equality_ok = false;
                witness = arc_to_string(inst.origin[a].second.first,
                                        inst.origin[a].second.second) +
                          " vs " +
                          arc_to_string(inst.origin[b].second.first,
                                        inst.origin[b].second.second);
            }
        }
    add("overlaps_capped_at_7r", cap_ok);
    add("overlap_7r_iff_composable", equality_ok, witness);

    add("parameters_match_formula",
        inst.k == inst.ell && inst.ell_prime == 4 * inst.r * inst.ell + 7 * inst.r);
    return report;
}

VerifyReport verify_construction(const BelowMatchingInstance& inst) {
    VerifyReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    bool template_ok = true;
    std::string template_detail;
    try {
        const BelowMatchingInstance fresh = longtrail_to_below_matching(inst.graph);
        template_ok = fresh.strings.size() == inst.strings.size();
        for (std::size_t i = 0; template_ok && i < inst.strings.size(); ++i)
            template_ok = fresh.strings.item(i).bytes == inst.strings.item(i).bytes;
    } catch (const std::exception& e) {
        template_ok = false;
        template_detail = e.what();
    }
    add("strings_match_template", template_ok, template_detail);

    const std::int64_t expect_len = 6 * inst.p + 3 * inst.q - 2;
    bool length_ok = true, alphabet_ok = true;
    for (const StringItem& it : inst.strings.items()) {
        if (static_cast<std::int64_t>(it.bytes.size()) != expect_len) length_ok = false;
        for (char c : it.bytes)
            if (c != '0' && c != '1') alphabet_ok = false;
    }
    add("string_lengths_match", length_ok);
    add("binary_alphabet", alphabet_ok);

    const auto m = static_cast<std::int64_t>(inst.graph.arcs.size());
    const std::int64_t n = inst.n;
    auto s_of = [&](std::int64_t h) -> const std::string& {
        return inst.strings.by_id(static_cast<int>(2 * (h - 1))).bytes;
    };
    auto sp_of = [&](std::int64_t h) -> const std::string& {
        return inst.strings.by_id(static_cast<int>(2 * (h - 1) + 1)).bytes;
    };

    bool prop1 = true;
    for (std::int64_t h = 1; h <= m; ++h) {
        if (overlap_length(s_of(h), sp_of(h)) != 2 * (n - 2)) prop1 = false;
        if (overlap_length(sp_of(h), s_of(h)) != n - 1) prop1 = false;
    }
    add("property_i_pair_overlaps", prop1);

    bool prop2 = true, prop3 = true;
    std::string witness;
    for (std::int64_t h = 1; h <= m; ++h)
        for (std::int64_t hp = 1; hp <= m; ++hp) {
            if (h == hp) continue;
            const auto& eh = inst.graph.arcs[static_cast<std::size_t>(h - 1)];
            const auto& ehp = inst.graph.arcs[static_cast<std::size_t>(hp - 1)];
            const std::int64_t want = eh.second == ehp.first ? n - 2 : 0;
            if (overlap_length(s_of(h), sp_of(hp)) != want) {
                prop2 = false;
                witness = arc_to_string(eh.first, eh.second) + " vs " +
                          arc_to_string(ehp.first, ehp.second);
            }
            if (overlap_length(sp_of(h), s_of(hp)) != 0 ||
                overlap_length(s_of(h), s_of(hp)) != 0 ||
                overlap_length(sp_of(h), sp_of(hp)) != 0)
                prop3 = false;
        }
    add("property_ii_composable_overlaps", prop2, witness);
    add("property_iii_zero_overlaps", prop3);

    const MatchingResult matching =
        max_weight_matching(build_weighted_graph(inst.strings));
    add("mu_matches_matching",
        matching.total_weight == inst.mu && inst.mu == 2 * (n - 2) * m,
        "mu=" + std::to_string(matching.total_weight));

    add("ell_prime_matches_formula",
        inst.ell_prime == inst.strings.total_length() - inst.mu - 1);
    return report;
}

} // namespace superstring
