#include "superstring/cli_app.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superstring/bounds.hpp"
#include "superstring/errors.hpp"
#include "superstring/exact.hpp"
#include "superstring/generators.hpp"
#include "superstring/instance_io.hpp"
#include "superstring/kernel.hpp"
#include "superstring/partial.hpp"

namespace superstring {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) {
    return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

ordered_json json_strings(const WeightedCollection& s) {
    ordered_json arr = ordered_json::array();
    for (const StringItem& it : s.items()) arr.push_back(it.bytes);
    return arr;
}

ordered_json json_arcs(const DiGraph& g) {
    ordered_json arr = ordered_json::array();
    for (const auto& [u, v] : g.arcs) arr.push_back({u, v});
    return arr;
}

ordered_json json_trace(const std::vector<RuleFiring>& trace) {
    ordered_json arr = ordered_json::array();
    for (const RuleFiring& f : trace) {
        ordered_json rec;
        rec["rule"] = f.rule;
        rec["ids"] = f.ids;
        rec["ell_after"] = f.ell_after;
        rec["r_after"] = f.r_after;
        for (const auto& [key, value] : f.detail) rec[key] = value;
        arr.push_back(std::move(rec));
    }
    return arr;
}

ordered_json json_report(const VerifyReport& report) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json rec;
        rec["name"] = c.name;
        rec["pass"] = c.pass;
        if (!c.detail.empty()) rec["detail"] = c.detail;
        checks.push_back(std::move(rec));
    }
    return checks;
}

ordered_json json_answer(const PartialAnswer& a) {
    ordered_json j;
    j["answer"] = a.found;
    if (a.found) {
        j["witness"] = a.superstring;
        j["result"] = {{"chosen", a.chosen}, {"weight", a.weight}};
    }
    return j;
}

struct PartialArgs {
    std::string path;
    int k = 0;
    std::int64_t ell = 0;
    std::int64_t bigw = -1;
    std::string mode = "randomized";
    double delta = 0.01;
    std::uint64_t seed = 0;
    std::int64_t budget = std::int64_t{1} << 21;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"solver and generator toolkit for shortest-superstring problems"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "include elapsed milliseconds in stats");

    std::function<ordered_json()> action;

    // exact
    {
        auto* cmd = app.add_subcommand("exact", "minimum-length superstring");
        auto args = std::make_shared<std::pair<std::string, int>>("", 24);
        cmd->add_option("file", args->first, "instance file")->required();
        cmd->add_option("--width", args->second, "bitmask width cap");
        cmd->callback([&action, args] {
            action = [args] {
                const ParsedInstance inst = load_instance(args->first);
                const ExactResult r =
                    shortest_superstring_dp(inst.collection, {args->second});
                ordered_json j;
                j["command"] = "exact";
                j["result"] = {{"length", r.length},
                               {"superstring", r.superstring},
                               {"order", r.order}};
                return j;
            };
        });
    }

    // decide
    {
        auto* cmd = app.add_subcommand("decide", "is there a superstring of length <= ell");
        struct Args {
            std::string path;
            std::int64_t ell = 0;
            int width = 24;
        };
        auto args = std::make_shared<Args>();
        cmd->add_option("file", args->path)->required();
        cmd->add_option("--ell", args->ell, "length threshold")->required();
        cmd->add_option("--width", args->width);
        cmd->callback([&action, args] {
            action = [args] {
                const ParsedInstance inst = load_instance(args->path);
                ordered_json j;
                j["command"] = "decide";
                j["answer"] = decide(inst.collection, args->ell, {args->width});
                return j;
            };
        });
    }

    // partial
    {
        auto* cmd = app.add_subcommand(
            "partial", "superstring of k strings within a length budget");
        auto args = std::make_shared<PartialArgs>();
        cmd->add_option("file", args->path)->required();
        cmd->add_option("--k", args->k, "number of strings to cover")->required();
        cmd->add_option("--ell", args->ell, "length threshold")->required();
        cmd->add_option("--bigw", args->bigw,
                        "weight threshold; switches to the weighted problem");
        cmd->add_option("--mode", args->mode)
            ->check(CLI::IsMember({"randomized", "deterministic"}));
        cmd->add_option("--delta", args->delta, "randomized failure bound");
        cmd->add_option("--seed", args->seed, "master seed");
        cmd->add_option("--budget", args->budget, "enumeration budget");
        cmd->callback([&action, args] {
            action = [args] {
                const ParsedInstance inst = load_instance(args->path);
                PartialOptions options;
                options.mode = args->mode == "deterministic"
                                   ? SolveMode::deterministic
                                   : SolveMode::randomized;
                options.delta = args->delta;
                options.seed = args->seed;
                options.budget = args->budget;
                const PartialAnswer a =
                    args->bigw >= 0
                        ? solve_weighted(inst.collection, args->k, args->ell,
                                         args->bigw, options)
                        : solve_partial(inst.collection, args->k, args->ell,
                                        options);
                ordered_json j;
                j["command"] = "partial";
                j.update(json_answer(a));
                if (options.mode == SolveMode::randomized)
                    j["stats"] = {{"trials", trials_needed(args->k, args->delta)}};
                return j;
            };
        });
    }

    // kernelize
    {
        auto* cmd = app.add_subcommand("kernelize", "compression-parameterized kernel");
        auto args = std::make_shared<std::pair<std::string, std::int64_t>>("", 0);
        cmd->add_option("file", args->first)->required();
        cmd->add_option("--ell", args->second, "length threshold")->required();
        cmd->callback([&action, args] {
            action = [args] {
                const ParsedInstance inst = load_instance(args->first);
                const KernelOutcome k = kernelize(inst.collection, args->second);
                ordered_json j;
                j["command"] = "kernelize";
                if (k.kind == KernelOutcome::Kind::decided) {
                    j["answer"] = k.answer;
                    j["decided_by"] = k.decided_by;
                } else {
                    j["result"] = {{"ell", k.reduced_ell},
                                   {"strings", json_strings(k.reduced)}};
                }
                j["stats"] = {{"rule_trace", json_trace(k.trace)}};
                return j;
            };
        });
    }

    // bound
    {
        auto* cmd = app.add_subcommand("bound", "matching-based length bound");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&action, path] {
            action = [path] {
                const ParsedInstance inst = load_instance(*path);
                const WeightedOverlapGraph g = build_weighted_graph(inst.collection);
                const MatchingResult m = max_weight_matching(g);
                const std::string s = matching_superstring(inst.collection, m);
                const std::int64_t saved = compression(inst.collection, s);
                ordered_json edges = ordered_json::array();
                for (const MatchedEdge& e : m.edges)
                    edges.push_back({{"a", e.id_a},
                                     {"b", e.id_b},
                                     {"weight", e.weight},
                                     {"from", e.from_id},
                                     {"to", e.to_id}});
                ordered_json j;
                j["command"] = "bound";
                j["result"] = {
                    {"total_length", inst.collection.total_length()},
                    {"mu", m.total_weight},
                    {"upper_bound", inst.collection.total_length() - m.total_weight},
                    {"matching", std::move(edges)},
                    {"superstring", s},
                    {"length", s.size()},
                    {"compression", saved}};
                return j;
            };
        });
    }

    // greedy
    {
        auto* cmd = app.add_subcommand("greedy", "max-overlap greedy baseline");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&action, path] {
            action = [path] {
                const ParsedInstance inst = load_instance(*path);
                const std::string s = greedy_superstring(inst.collection);
                const std::int64_t saved = compression(inst.collection, s);
                ordered_json j;
                j["command"] = "greedy";
                j["result"] = {{"length", s.size()},
                               {"superstring", s},
                               {"compression", saved}};
                return j;
            };
        });
    }

    // gen-longtrail
    {
        auto* cmd = app.add_subcommand(
            "gen-longtrail", "Hamiltonian path to Long Trail reduction");
        auto args = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("graph", args->first)->required();
        cmd->add_option("--out", args->second, "write the derived graph here");
        cmd->callback([&action, args] {
            action = [args] {
                const DiGraph g = load_graph(args->first);
                const LongTrailReduction red = hampath_to_longtrail(g);
                if (!args->second.empty()) save_graph(red.graph, args->second);
                ordered_json j;
                j["command"] = "gen-longtrail";
                j["result"] = {{"n", red.graph.n},
                               {"m", red.graph.arcs.size()},
                               {"ell", red.ell},
                               {"arcs", json_arcs(red.graph)}};
                if (!args->second.empty()) j["written_to"] = args->second;
                return j;
            };
        });
    }

    // gen-crosscomp
    {
        auto* cmd = app.add_subcommand(
            "gen-crosscomp", "Long Trail ensemble to Partial Superstring");
        struct Args {
            std::vector<std::string> paths;
            std::int64_t ell = 0;
            std::string out;
        };
        auto args = std::make_shared<Args>();
        cmd->add_option("graphs", args->paths, "graph files")->required();
        cmd->add_option("--ell", args->ell, "shared trail target")->required();
        cmd->add_option("--out", args->out, "write the instance file here");
        cmd->callback([&action, args] {
            action = [args] {
                std::vector<DiGraph> graphs;
                for (const std::string& p : args->paths) graphs.push_back(load_graph(p));
                const PartialInstance inst = longtrail_to_partial(graphs, args->ell);
                if (!args->out.empty()) save_instance(to_instance_file(inst), args->out);
                ordered_json j;
                j["command"] = "gen-crosscomp";
                j["result"] = {{"n", inst.n},
                               {"t", inst.graphs.size()},
                               {"r", inst.r},
                               {"k", inst.k},
                               {"ell_prime", inst.ell_prime},
                               {"count", inst.strings.size()},
                               {"strings", json_strings(inst.strings)}};
                if (!args->out.empty()) j["written_to"] = args->out;
                return j;
            };
        });
    }

    // gen-belowmatching
    {
        auto* cmd = app.add_subcommand(
            "gen-belowmatching", "Long Trail to Shortest Superstring below the matching bound");
        auto args = std::make_shared<std::pair<std::string, std::string>>();
        cmd->add_option("graph", args->first)->required();
        cmd->add_option("--out", args->second, "write the instance file here");
        cmd->callback([&action, args] {
            action = [args] {
                const DiGraph g = load_graph(args->first);
                const BelowMatchingInstance inst = longtrail_to_below_matching(g);
                if (!args->second.empty())
                    save_instance(to_instance_file(inst), args->second);
                ordered_json j;
                j["command"] = "gen-belowmatching";
                j["result"] = {{"n", inst.n},
                               {"m", inst.graph.arcs.size()},
                               {"p", inst.p},
                               {"q", inst.q},
                               {"mu", inst.mu},
                               {"ell_prime", inst.ell_prime},
                               {"count", inst.strings.size()},
                               {"strings", json_strings(inst.strings)}};
                if (!args->second.empty()) j["written_to"] = args->second;
                return j;
            };
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand(
            "verify", "re-derive a generated instance and check its claims");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&action, path] {
            action = [path] {
                const ParsedInstance file = load_instance(*path);
                const Provenance prov = provenance_of(file);
                const WeightedCollection& rebuilt =
                    prov.kind == ProvenanceKind::crosscomp
                        ? prov.crosscomp.strings
                        : prov.belowmatching.strings;
                bool matches = rebuilt.size() == file.collection.size();
                for (std::size_t i = 0; matches && i < rebuilt.size(); ++i)
                    matches = rebuilt.item(i).bytes == file.collection.item(i).bytes;

                VerifyReport report;
                report.checks.push_back({"file_matches_provenance", matches, ""});
                const VerifyReport derived =
                    prov.kind == ProvenanceKind::crosscomp
                        ? verify_construction(prov.crosscomp)
                        : verify_construction(prov.belowmatching);
                report.checks.insert(report.checks.end(), derived.checks.begin(),
                                     derived.checks.end());

                ordered_json j;
                j["command"] = "verify";
                j["result"] = {{"construction",
                                prov.kind == ProvenanceKind::crosscomp
                                    ? "crosscomp"
                                    : "belowmatching"},
                               {"all_pass", report.all_pass()},
                               {"checks", json_report(report)}};
                return j;
            };
        });
    }

    // oracle-trail
    {
        auto* cmd = app.add_subcommand("oracle-trail", "exact longest trail length");
        auto args = std::make_shared<std::pair<std::string, std::int64_t>>("", 18);
        cmd->add_option("graph", args->first)->required();
        cmd->add_option("--budget", args->second, "maximum arc count");
        cmd->callback([&action, args] {
            action = [args] {
                const DiGraph g = load_graph(args->first);
                const std::int64_t best = longest_trail_bruteforce(g, args->second);
                ordered_json j;
                j["command"] = "oracle-trail";
                j["result"] = {{"max_trail_length", best}};
                return j;
            };
        });
    }

    // oracle-hampath
    {
        auto* cmd = app.add_subcommand("oracle-hampath", "exact Hamiltonian path test");
        auto path = std::make_shared<std::string>();
        cmd->add_option("graph", *path)->required();
        cmd->callback([&action, path] {
            action = [path] {
                const DiGraph g = load_graph(*path);
                ordered_json j;
                j["command"] = "oracle-hampath";
                j["answer"] = hamiltonian_path_bruteforce(g);
                return j;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json j;
        j["error"] = {{"type", "input"}, {"message", e.what()}};
        err << dump(j) << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        ordered_json result = action();
        if (timing) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started);
            if (!result.contains("stats")) result["stats"] = ordered_json::object();
            result["stats"]["elapsed_ms"] = elapsed.count();
        }
        out << dump(result) << "\n";
        return 0;
    } catch (const capacity_error& e) {
        ordered_json j;
        j["error"] = {{"type", "capacity"}, {"message", e.what()}};
        err << dump(j) << "\n";
        return 3;
    } catch (const contract_error& e) {
        ordered_json j;
        j["error"] = {{"type", "contract"}, {"message", e.what()}};
        err << dump(j) << "\n";
        return 2;
    } catch (const input_error& e) {
        ordered_json j;
        j["error"] = {{"type", "input"}, {"message", e.what()}};
        err << dump(j) << "\n";
        return 2;
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"] = {{"type", "internal"}, {"message", e.what()}};
        err << dump(j) << "\n";
        return 2;
    }
}

} // namespace superstring
