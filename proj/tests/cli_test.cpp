#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "superstring/cli_app.hpp"
#include "superstring/errors.hpp"
#include "superstring/instance_io.hpp"

using namespace superstring;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
    json parsed_err() const { return json::parse(err); }
};

RunResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"superstring"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    RunResult r;
    r.exit_code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("superstring_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const std::string p = (path / name).string();
        std::ofstream f(p, std::ios::binary);
        f << content;
        return p;
    }
    std::string name(const std::string& n) const { return (path / n).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("instance files parse and serialize canonically") {
    SUBCASE("unweighted with comments") {
        const std::string text = "# a comment\nabc\nbcd\n";
        const ParsedInstance inst = parse_instance_text(text);
        CHECK_FALSE(inst.weighted);
        CHECK(inst.collection.size() == 2);
        CHECK(serialize_instance(inst) == text);
    }
    SUBCASE("weighted bodies") {
        const std::string text = "3\tab\n1\tcd\n";
        const ParsedInstance inst = parse_instance_text(text);
        CHECK(inst.weighted);
        CHECK(inst.collection.weight(0) == 3);
        CHECK(serialize_instance(inst) == text);
    }
    SUBCASE("blank lines are dropped, not round-tripped") {
        const ParsedInstance inst = parse_instance_text("ab\n\ncd\n");
        CHECK(inst.collection.size() == 2);
        CHECK(serialize_instance(inst) == "ab\ncd\n");
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_instance_text("ab\n3\tcd\n"), input_error);
        CHECK_THROWS_AS(parse_instance_text("3\tab\ncd\n"), input_error);
        CHECK_THROWS_AS(parse_instance_text("ab\n# late comment\ncd\n"), input_error);
        CHECK_THROWS_AS(parse_instance_text("ab\r\ncd\r\n"), input_error);
        CHECK_THROWS_AS(parse_instance_text("3\t\n"), input_error);
    }
}

TEST_CASE("graph files parse strictly") {
    const DiGraph g = parse_graph_text("3 2\n1 2\n2 3\n");
    CHECK(g.n == 3);
    CHECK(g.arcs.size() == 2);
    CHECK(serialize_graph(g) == "3 2\n1 2\n2 3\n");
    CHECK_THROWS_AS(parse_graph_text(""), input_error);
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph_text("2 2\n1 2\n1 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 3\n"), input_error);
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 2\n9\n"), input_error);
}

TEST_CASE("exact/decide/greedy/bound commands answer in JSON") {
    TempDir dir;
    const std::string inst = dir.file("i.txt", "abc\nbcd\ncde\n");

    const RunResult exact = run({"exact", inst});
    REQUIRE(exact.exit_code == 0);
    CHECK(exact.parsed()["result"]["length"] == 5);
    CHECK(exact.parsed()["result"]["superstring"] == "abcde");

    CHECK(run({"decide", inst, "--ell", "5"}).parsed()["answer"] == true);
    CHECK(run({"decide", inst, "--ell", "4"}).parsed()["answer"] == false);

    const json greedy = run({"greedy", inst}).parsed();
    CHECK(greedy["result"]["length"] == 5);
    CHECK(greedy["result"]["compression"] == 4);

    const json bound = run({"bound", inst}).parsed();
    CHECK(bound["result"]["mu"] == 2);
    CHECK(bound["result"]["upper_bound"] == 7);
    CHECK(bound["result"]["compression"] >= 2);
}

TEST_CASE("partial and kernelize commands answer with witnesses") {
    TempDir dir;
    const std::string partial_file = dir.file("p.txt", "ab\nbc\nzz\n");
    const json partial = run({"partial", partial_file, "--k", "2", "--ell", "3",
                              "--mode", "deterministic"})
                             .parsed();
    CHECK(partial["answer"] == true);
    CHECK(partial["witness"] == "abc");

    const std::string kern_file = dir.file("k.txt", "ab\ncd\n");
    const json kern = run({"kernelize", kern_file, "--ell", "3"}).parsed();
    CHECK(kern["answer"] == false);
    CHECK(kern["decided_by"] == "rule2");
    CHECK(kern["stats"]["rule_trace"].size() >= 2);

    // --bigw switches to the weighted problem over the file's weights
    const std::string weighted = dir.file("w.txt", "5\tab\n1\tbc\n9\tzz\n");
    const json heavy = run({"partial", weighted, "--k", "2", "--ell", "4",
                            "--bigw", "14", "--mode", "deterministic"})
                           .parsed();
    CHECK(heavy["answer"] == true);
    CHECK(heavy["result"]["weight"] == 14);
    const json too_heavy = run({"partial", weighted, "--k", "2", "--ell", "4",
                                "--bigw", "15", "--mode", "deterministic"})
                               .parsed();
    CHECK(too_heavy["answer"] == false);
}

TEST_CASE("identical inputs and seeds give byte-identical output") {
    TempDir dir;
    const std::string inst = dir.file("i.txt", "ab\nbc\nca\nzz\n");
    const RunResult a =
        run({"partial", inst, "--k", "3", "--ell", "4", "--seed", "7"});
    const RunResult b =
        run({"partial", inst, "--k", "3", "--ell", "4", "--seed", "7"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("generator files round-trip byte-for-byte and verify") {
    TempDir dir;
    const std::string g1 = dir.file("g1.txt", "4 3\n1 2\n2 3\n3 4\n");
    const std::string g2 = dir.file("g2.txt", "4 2\n1 2\n2 1\n");

    SUBCASE("cross-composition") {
        const std::string out_path = dir.name("cross.txt");
        const RunResult gen = run({"gen-crosscomp", g1, g2, "--ell", "2", "--out",
                                   out_path});
        REQUIRE(gen.exit_code == 0);
        CHECK(gen.parsed()["result"]["k"] == 2);

        const std::string bytes = slurp(out_path);
        CHECK(serialize_instance(parse_instance_text(bytes)) == bytes);

        const json verify = run({"verify", out_path}).parsed();
        CHECK(verify["result"]["construction"] == "crosscomp");
        CHECK(verify["result"]["all_pass"] == true);
    }
    SUBCASE("below-matching") {
        std::string graph_text = "64 63\n";
        for (int v = 1; v < 64; ++v)
            graph_text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
        const std::string g3 = dir.file("g3.txt", graph_text);
        const std::string out_path = dir.name("below.txt");
        const RunResult gen = run({"gen-belowmatching", g3, "--out", out_path});
        REQUIRE(gen.exit_code == 0);
        CHECK(gen.parsed()["result"]["p"] == 21);

        const std::string bytes = slurp(out_path);
        CHECK(serialize_instance(parse_instance_text(bytes)) == bytes);

        const json verify = run({"verify", out_path}).parsed();
        CHECK(verify["result"]["all_pass"] == true);
    }
    SUBCASE("long-trail graphs") {
        const std::string out_path = dir.name("trail.txt");
        const RunResult gen = run({"gen-longtrail", g1, "--out", out_path});
        REQUIRE(gen.exit_code == 0);
        CHECK(gen.parsed()["result"]["ell"] == 9);
        const std::string bytes = slurp(out_path);
        CHECK(serialize_graph(parse_graph_text(bytes)) == bytes);
    }
    SUBCASE("generator preconditions surface as input errors") {
        CHECK(run({"gen-crosscomp", g1, "--ell", "4"}).exit_code == 2);
        const std::string small = dir.file("small.txt", "3 1\n1 2\n");
        CHECK(run({"gen-belowmatching", small}).exit_code == 2);
    }
}

TEST_CASE("oracle commands") {
    TempDir dir;
    const std::string cyc = dir.file("c.txt", "3 3\n1 2\n2 3\n3 1\n");
    CHECK(run({"oracle-trail", cyc}).parsed()["result"]["max_trail_length"] == 3);
    CHECK(run({"oracle-hampath", cyc}).parsed()["answer"] == true);
}

TEST_CASE("exit codes and error objects") {
    TempDir dir;
    SUBCASE("missing file") {
        const RunResult r = run({"exact", dir.name("absent.txt")});
        CHECK(r.exit_code == 2);
        CHECK(r.parsed_err()["error"]["type"] == "input");
    }
    SUBCASE("malformed graph") {
        const std::string bad = dir.file("bad.txt", "2 1\n1 1\n");
        const RunResult r = run({"oracle-trail", bad});
        CHECK(r.exit_code == 2);
    }
    SUBCASE("capacity exceeded") {
        std::string text = "20 40\n";
        for (int u = 1; u <= 20; ++u) {
            text += std::to_string(u) + " " + std::to_string(u % 20 + 1) + "\n";
            text += std::to_string(u % 20 + 1) + " " + std::to_string(u) + "\n";
        }
        const std::string big = dir.file("big.txt", text);
        const RunResult r = run({"oracle-trail", big});
        CHECK(r.exit_code == 3);
        CHECK(r.parsed_err()["error"]["type"] == "capacity");
    }
    SUBCASE("unknown command") {
        CHECK(run({"frobnicate"}).exit_code == 2);
    }
}

TEST_CASE("timing flag adds stats without breaking determinism elsewhere") {
    TempDir dir;
    const std::string inst = dir.file("i.txt", "ab\n");
    const RunResult with = run({"--timing", "exact", inst});
    REQUIRE(with.exit_code == 0);
    CHECK(with.parsed()["stats"].contains("elapsed_ms"));
    const RunResult without = run({"exact", inst});
    CHECK_FALSE(without.parsed().contains("stats"));
}
