#include "superstring/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "superstring/errors.hpp"

namespace superstring {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kProvenancePrefix = "# provenance ";

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool looks_weighted(std::string_view line) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) return false;
    for (std::size_t i = 0; i < tab; ++i)
        if (!std::isdigit(static_cast<unsigned char>(line[i]))) return false;
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

ordered_json graph_to_json(const DiGraph& g) {
    ordered_json arcs = ordered_json::array();
    for (const auto& [u, v] : g.arcs) arcs.push_back({u, v});
    return arcs;
}

DiGraph graph_from_json(int n, const ordered_json& arcs_json) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& arc : arcs_json)
        arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
    return make_digraph(n, std::move(arcs));
}

} // namespace

ParsedInstance parse_instance_text(std::string_view text) {
    ParsedInstance inst;
    bool body_started = false;
    bool mode_known = false;
    for (std::string_view line : split_lines(text)) {
        if (!line.empty() && line.back() == '\r')
            throw input_error("CR line endings are not supported");
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (body_started)
                throw input_error("comments are only allowed before the body");
            inst.header_comments.emplace_back(line);
            continue;
        }
        body_started = true;
        const bool weighted_line = looks_weighted(line);
        if (!mode_known) {
            inst.weighted = weighted_line;
            mode_known = true;
        } else if (weighted_line != inst.weighted) {
            throw input_error("mixed weighted and unweighted body lines");
        }
        if (weighted_line) {
            const std::size_t tab = line.find('\t');
            std::int64_t w = 0;
            try {
                w = std::stoll(std::string(line.substr(0, tab)));
            } catch (const std::exception&) {
                throw input_error("weight does not fit a 64-bit integer");
            }
            inst.collection.append(std::string(line.substr(tab + 1)), w);
        } else {
            inst.collection.append(std::string(line));
        }
    }
    return inst;
}

ParsedInstance load_instance(const std::string& path) {
    return parse_instance_text(read_file(path));
}

std::string serialize_instance(const ParsedInstance& inst) {
    std::string out;
    for (const std::string& c : inst.header_comments) {
        out += c;
        out += '\n';
    }
    for (std::size_t i = 0; i < inst.collection.size(); ++i) {
        if (inst.weighted) {
            out += std::to_string(inst.collection.weight(i));
            out += '\t';
        }
        out += inst.collection.item(i).bytes;
        out += '\n';
    }
    return out;
}

void save_instance(const ParsedInstance& inst, const std::string& path) {
    write_file(path, serialize_instance(inst));
}

DiGraph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw input_error("graph file must start with 'n m'");
    if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000)
        throw input_error("graph dimensions out of range");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw input_error("graph file is missing arcs");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra = 0;
    if (in >> extra) throw input_error("trailing tokens after the arc list");
    return make_digraph(static_cast<int>(n), std::move(arcs));
}

DiGraph load_graph(const std::string& path) {
    return parse_graph_text(read_file(path));
}

std::string serialize_graph(const DiGraph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.arcs.size()) + "\n";
    for (const auto& [u, v] : g.arcs)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void save_graph(const DiGraph& g, const std::string& path) {
    write_file(path, serialize_graph(g));
}

ParsedInstance to_instance_file(const PartialInstance& inst) {
    ordered_json prov;
    prov["construction"] = "crosscomp";
    prov["n"] = inst.n;
    prov["t"] = inst.graphs.size();
    prov["ell"] = inst.ell;
    prov["r"] = inst.r;
    prov["k"] = inst.k;
    prov["ell_prime"] = inst.ell_prime;
    ordered_json graphs = ordered_json::array();
    for (const DiGraph& g : inst.graphs) graphs.push_back(graph_to_json(g));
    prov["graphs"] = std::move(graphs);

    ParsedInstance file;
    file.header_comments.push_back(std::string(kProvenancePrefix) + prov.dump());
    file.weighted = false;
    for (const StringItem& it : inst.strings.items())
        file.collection.append_with_id(it.id, it.bytes, 1);
    return file;
}

ParsedInstance to_instance_file(const BelowMatchingInstance& inst) {
    ordered_json prov;
    prov["construction"] = "belowmatching";
    prov["n"] = inst.n;
    prov["m"] = inst.graph.arcs.size();
    prov["p"] = inst.p;
    prov["q"] = inst.q;
    prov["mu"] = inst.mu;
    prov["ell_prime"] = inst.ell_prime;
    prov["arcs"] = graph_to_json(inst.graph);

    ParsedInstance file;
    file.header_comments.push_back(std::string(kProvenancePrefix) + prov.dump());
    file.weighted = false;
    for (const StringItem& it : inst.strings.items())
        file.collection.append_with_id(it.id, it.bytes, 1);
    return file;
}

Provenance provenance_of(const ParsedInstance& inst) {
    const std::string* line = nullptr;
    for (const std::string& c : inst.header_comments)
        if (c.rfind(kProvenancePrefix, 0) == 0) {
            line = &c;
            break;
        }
    if (line == nullptr)
        throw input_error("instance file carries no provenance header");

    ordered_json prov;
    try {
        prov = ordered_json::parse(line->substr(kProvenancePrefix.size()));
    } catch (const std::exception& e) {
        throw input_error(std::string("malformed provenance header: ") + e.what());
    }

    Provenance out;
    const std::string construction = prov.at("construction").get<std::string>();
    if (construction == "crosscomp") {
        out.kind = ProvenanceKind::crosscomp;
        const int n = prov.at("n").get<int>();
        std::vector<DiGraph> graphs;
        for (const auto& arcs : prov.at("graphs"))
            graphs.push_back(graph_from_json(n, arcs));
        out.crosscomp = longtrail_to_partial(graphs, prov.at("ell").get<std::int64_t>());
    } else if (construction == "belowmatching") {
        out.kind = ProvenanceKind::belowmatching;
        const int n = prov.at("n").get<int>();
        out.belowmatching =
            longtrail_to_below_matching(graph_from_json(n, prov.at("arcs")));
    } else {
        throw input_error("unknown construction in provenance: " + construction);
    }
    return out;
}

} // namespace superstring
