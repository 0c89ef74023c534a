#include "mono/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace mono::io {

namespace {
    [[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

    std::size_t get_count(const Json& j, const char* key)
    {
        if (!j.contains(key) || !j[key].is_number_unsigned())
            parse_error(std::string("missing or non-negative integer field '") + key + "'");
        return j[key].get<std::size_t>();
    }

    std::uint32_t get_index(const Json& v)
    {
        if (!v.is_number_unsigned())
            parse_error("edge entries must be non-negative integers");
        const auto value = v.get<std::uint64_t>();
        if (value > UINT32_MAX)
            parse_error("index too large");
        return static_cast<std::uint32_t>(value);
    }

    Json vertex_list(const std::vector<Vertex>& vs)
    {
        Json a = Json::array();
        for (Vertex v : vs)
            a.push_back(v);
        return a;
    }
}

Json graph_to_json(const BipartiteGraph& host, const EdgeColoring* coloring)
{
    Json j;
    j["m"] = host.m();
    j["n"] = host.n();
    Json edges = Json::array();
    if (coloring) {
        j["r"] = coloring->r();
        for (const auto& e : coloring->colored_edges())
            edges.push_back(Json::array({e.x, e.y, e.color}));
    } else {
        for (const auto& e : host.edges())
            edges.push_back(Json::array({e.x, e.y}));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json graph_to_json(const GeneralGraph& g)
{
    Json j;
    j["n"] = g.n();
    j["r"] = g.r();
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json::array({e.u, e.v, e.color}));
    j["edges"] = std::move(edges);
    return j;
}

bool is_general_graph(const Json& j)
{
    const Json& g = j.is_object() && j.contains("graph") ? j["graph"] : j;
    return g.is_object() && !g.contains("m") && g.contains("n");
}

LoadedGraph graph_from_json(const Json& root)
{
    const Json& j = root.is_object() && root.contains("graph") ? root["graph"] : root;
    if (!j.is_object())
        parse_error("graph must be a JSON object");
    const std::size_t m = get_count(j, "m");
    const std::size_t n = get_count(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        parse_error("missing 'edges' array");

    std::vector<ColoredEdge> colored;
    std::optional<bool> triples;
    std::size_t max_color = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            parse_error("each edge must be [x,y] or [x,y,c]");
        const bool is_triple = e.size() == 3;
        if (triples && *triples != is_triple)
            parse_error("edges mix [x,y] pairs and [x,y,c] triples");
        triples = is_triple;
        ColoredEdge ce{get_index(e[0]), get_index(e[1]), is_triple ? get_index(e[2]) : 0};
        max_color = std::max<std::size_t>(max_color, ce.color);
        colored.push_back(ce);
    }

    LoadedGraph out;
    std::vector<Edge> plain(colored.size());
    std::transform(colored.begin(), colored.end(), plain.begin(), [](const ColoredEdge& e) { return Edge{e.x, e.y}; });
    out.host = BipartiteGraph::from_edge_list(m, n, plain);
    const bool has_r = j.contains("r");
    if (triples.value_or(false) || has_r) {
        const std::size_t r = has_r ? get_count(j, "r") : max_color + 1;
        out.coloring = EdgeColoring::from_colored_edges(m, n, r, colored);
    }
    return out;
}

GeneralGraph general_graph_from_json(const Json& root)
{
    const Json& j = root.is_object() && root.contains("graph") ? root["graph"] : root;
    if (!j.is_object())
        parse_error("graph must be a JSON object");
    const std::size_t n = get_count(j, "n");
    const std::size_t r = get_count(j, "r");
    if (!j.contains("edges") || !j["edges"].is_array())
        parse_error("missing 'edges' array");
    std::vector<GeneralEdge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3)
            parse_error("each general edge must be [u,v,c]");
        edges.push_back({get_index(e[0]), get_index(e[1]), get_index(e[2])});
    }
    return GeneralGraph::from_edges(n, r, edges);
}

Json parse(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(e.what());
    }
}

Json load_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string canonical_text(const Json& j) { return j.dump(); }

std::string report_text(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Component& c)
{
    Json j;
    j["color"] = c.color;
    j["order"] = c.order();
    j["xs"] = vertex_list(c.xs);
    j["ys"] = vertex_list(c.ys);
    return j;
}

Json to_json(const DegreeProfile& p)
{
    Json j;
    j["delta_xy"] = p.delta_xy;
    j["delta_yx"] = p.delta_yx;
    j["avg_xy"] = to_json(p.avg_xy);
    j["avg_yx"] = to_json(p.avg_yx);
    return j;
}

Json to_json(const Verdict& v)
{
    Json j;
    j["check"] = v.check;
    j["applicable"] = v.applicable;
    j["holds"] = v.holds;
    j["target"] = to_json(v.target);
    j["largest_order"] = v.largest_order;
    j["margin"] = to_json(v.margin);
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

Json to_json(const StabilityReport& s)
{
    Json j;
    j["check"] = "stability";
    j["m"] = s.m;
    j["n"] = s.n;
    j["r"] = s.r;
    j["edges"] = s.edges;
    j["delta"] = to_json(s.delta);
    j["alpha"] = to_json(s.alpha);
    j["beta"] = to_json(s.beta);
    j["hypothesis_ok"] = s.hypothesis_ok;
    j["exceptional_x"] = vertex_list(s.exceptional_x);
    j["exceptional_y"] = vertex_list(s.exceptional_y);
    j["k_x"] = s.k_x;
    j["k_y"] = s.k_y;
    j["defect_x"] = to_json(s.defect_x);
    j["defect_y"] = to_json(s.defect_y);
    j["double_star_order"] = s.double_star_order;
    j["case_i"] = s.case_i;
    j["case_ii"] = s.case_ii;
    j["dichotomy"] = s.dichotomy();
    return j;
}

Json to_json(const MainComponentsReport& rep)
{
    Json j;
    j["check"] = "mainlemma";
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["delta"] = to_json(rep.delta);
    j["alpha"] = to_json(rep.alpha);
    j["beta"] = to_json(rep.beta);
    j["degrees"] = to_json(rep.degrees);
    j["precondition_ok"] = rep.precondition_ok;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    j["component_count"] = rep.component_count;
    Json comps = Json::array();
    for (const auto& c : rep.components) {
        Json cj;
        cj["order"] = c.order();
        cj["x_count"] = c.xs.size();
        cj["y_count"] = c.ys.size();
        cj["min_x"] = c.xs.empty() ? Json(nullptr) : Json(c.xs.front());
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["z_x"] = vertex_list(rep.z_x);
    j["z_y"] = vertex_list(rep.z_y);
    Json flags;
    flags["has_r_components"] = rep.has_r_components;
    flags["a"] = rep.a;
    flags["b"] = rep.b;
    flags["c"] = rep.c;
    flags["d"] = rep.d;
    flags["e"] = rep.e;
    j["flags"] = std::move(flags);
    j["flags_asserted"] = rep.applicable();
    return j;
}

Json to_json(const BipartitionReduction& red)
{
    Json j;
    j["avoided_color"] = red.avoided_color;
    j["side_a"] = vertex_list(red.side_a);
    j["side_b"] = vertex_list(red.side_b);
    j["induced"] = graph_to_json(red.induced, &red.induced_coloring);
    j["x_vertices"] = vertex_list(red.x_vertices);
    j["y_vertices"] = vertex_list(red.y_vertices);
    return j;
}

Json to_json(const CorollaryReport& rep)
{
    Json j;
    j["check"] = "corollary";
    j["variant"] = rep.variant == CorollaryVariant::PowerBound ? "power" : "7/8";
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["min_degree"] = rep.min_degree;
    j["applicable"] = rep.applicable;
    j["holds"] = rep.holds;
    j["target"] = to_json(rep.target);
    j["largest_order"] = rep.largest_order;
    j["margin"] = to_json(rep.margin);
    if (rep.witness) {
        Json w;
        w["color"] = rep.witness->color;
        w["order"] = rep.witness->order();
        w["vertices"] = vertex_list(rep.witness->vertices);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["reduction_threshold"] = to_json(rep.reduction_threshold);
    if (rep.chain) {
        Json c;
        c["avoided_color"] = rep.chain->avoided_color;
        c["min_side"] = rep.chain->min_side;
        c["split"] = rep.chain->split ? to_json(*rep.chain->split) : Json(nullptr);
        c["bipartite"] = rep.chain->bipartite ? to_json(*rep.chain->bipartite) : Json(nullptr);
        j["chain"] = std::move(c);
    } else {
        j["chain"] = nullptr;
    }
    return j;
}

Json to_json(const Certificate& cert)
{
    Json j;
    j["m"] = cert.m;
    j["n"] = cert.n;
    j["edges"] = cert.edges;
    j["delta_xy"] = cert.degrees.delta_xy;
    j["delta_yx"] = cert.degrees.delta_yx;
    j["avg_xy"] = to_json(cert.degrees.avg_xy);
    j["avg_yx"] = to_json(cert.degrees.avg_yx);
    j["largest_component"] = cert.largest_component ? Json(*cert.largest_component) : Json(nullptr);
    j["largest_double_star"] = cert.largest_double_star ? Json(*cert.largest_double_star) : Json(nullptr);
    j["component_claim_asserted"] = cert.component_claim_asserted;
    j["checks_passed"] = cert.checks_passed;
    if (!cert.notes.empty())
        j["notes"] = cert.notes;
    return j;
}

Json to_json(const SearchOutcome& out, std::string_view mode)
{
    Json j;
    j["mode"] = mode;
    j["kind"] = name(out.kind);
    j["value"] = out.value ? Json(*out.value) : Json(nullptr);
    j["lower_bound"] = out.lower_bound ? Json(*out.lower_bound) : Json(nullptr);
    j["examined"] = out.examined;
    j["exhaustive"] = out.exhaustive;
    j["witness"] = out.witness ? graph_to_json(out.witness->union_graph(), &*out.witness) : Json(nullptr);
    return j;
}

Json to_json(const std::vector<FrontierRow>& rows, std::size_t total_n)
{
    Json j;
    j["total_n"] = total_n;
    j["label"] = "exploratory evidence, not ground truth";
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json rj;
        rj["alpha"] = to_json(row.alpha);
        rj["verdict"] = row.verdict;
        Json hosts = Json::array();
        for (const auto& h : row.hosts) {
            Json hj;
            hj["family"] = h.family;
            hj["m"] = h.m;
            hj["n"] = h.n;
            hj["removed"] = h.removed;
            hj["edges"] = h.edges;
            hj["search"] = h.exhaustive ? "exhaustive" : "random";
            hj["outcome"] = to_json(h.outcome, h.exhaustive ? "below" : "random");
            hosts.push_back(std::move(hj));
        }
        rj["hosts"] = std::move(hosts);
        arr.push_back(std::move(rj));
    }
    j["rows"] = std::move(arr);
    return j;
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

}  // namespace mono::io
