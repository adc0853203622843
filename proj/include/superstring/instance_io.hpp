#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superstring/generators.hpp"
#include "superstring/strings.hpp"

namespace superstring {

/// An instance file: a leading block of '#' header comments followed by body
/// lines that are either raw strings or "<decimal weight>\t<string>". Mixing
/// the two body forms is rejected; blank lines are ignored.
struct ParsedInstance {
    std::vector<std::string> header_comments;  // verbatim, incl. leading '#'
    bool weighted = false;
    WeightedCollection collection;
};

ParsedInstance parse_instance_text(std::string_view text);
ParsedInstance load_instance(const std::string& path);

/// Canonical serialization: header comments, then one LF-terminated line per
/// item, strings verbatim, weighted lines as "<weight>\t<string>".
std::string serialize_instance(const ParsedInstance& inst);
void save_instance(const ParsedInstance& inst, const std::string& path);

/// Graph files: a "n m" line followed by m lines "u v", 1-based.
DiGraph parse_graph_text(std::string_view text);
DiGraph load_graph(const std::string& path);
std::string serialize_graph(const DiGraph& g);
void save_graph(const DiGraph& g, const std::string& path);

/// Generated instances carry their construction parameters in a
/// "# provenance <json>" header line so they can be re-derived and verified.
ParsedInstance to_instance_file(const PartialInstance& inst);
ParsedInstance to_instance_file(const BelowMatchingInstance& inst);

enum class ProvenanceKind { none, crosscomp, belowmatching };
struct Provenance {
    ProvenanceKind kind = ProvenanceKind::none;
    PartialInstance crosscomp;          // rebuilt from the header
    BelowMatchingInstance belowmatching;
};

/// Re-derives the generated instance named by the provenance header; throws
/// input_error when the header is missing or malformed.
Provenance provenance_of(const ParsedInstance& inst);

} // namespace superstring
