#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mono/analysis.hpp"
#include "mono/bigraph.hpp"
#include "mono/constructions.hpp"
#include "mono/frontier.hpp"
#include "mono/general_graph.hpp"
#include "mono/search.hpp"

namespace mono::io {

using Json = nlohmann::ordered_json;

struct LoadedGraph {
    BipartiteGraph host;
    std::optional<EdgeColoring> coloring;
};

/// {"m":int,"n":int,"r":int,"edges":[[x,y,c],...]}, edges sorted by (x,y);
/// uncolored graphs drop "r" and use [x,y] pairs.
Json graph_to_json(const BipartiteGraph& host, const EdgeColoring* coloring = nullptr);
Json graph_to_json(const GeneralGraph& g);

/// Accepts the canonical form or a {"graph": ..., ...} wrapper. Throws
/// mono::Error (Parse, or the construction error for bad edges).
LoadedGraph graph_from_json(const Json& j);
GeneralGraph general_graph_from_json(const Json& j);
bool is_general_graph(const Json& j);

Json parse(std::string_view text);
Json load_file(const std::string& path);

/// Compact, byte-stable text.
std::string canonical_text(const Json& j);
/// Indented text plus trailing newline, for reports.
std::string report_text(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Component& c);
Json to_json(const DegreeProfile& p);
Json to_json(const Verdict& v);
Json to_json(const StabilityReport& s);
Json to_json(const MainComponentsReport& rep);
Json to_json(const BipartitionReduction& red);
Json to_json(const CorollaryReport& rep);
Json to_json(const Certificate& cert);
/// Excludes elapsed time so equal outcomes serialize to equal bytes.
Json to_json(const SearchOutcome& out, std::string_view mode);
Json to_json(const std::vector<FrontierRow>& rows, std::size_t total_n);

/// Hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace mono::io
