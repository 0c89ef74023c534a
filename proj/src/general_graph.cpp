#include "mono/general_graph.hpp"

#include <algorithm>
#include <string>

#include "mono/union_find.hpp"

namespace mono {

GeneralGraph GeneralGraph::from_edges(std::size_t n, std::size_t r, std::span<const GeneralEdge> edges)
{
    if (r == 0 || r >= kNone)
        throw Error(ErrorKind::InvalidSpec, "color count must be in [1, 254]");
    GeneralGraph g;
    g.n_ = n;
    g.r_ = r;
    g.color_.assign(n * n, kNone);
    g.degree_.assign(n, 0);
    for (GeneralEdge e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside [0," + std::to_string(n) + ")");
        if (e.u == e.v)
            throw Error(ErrorKind::InvalidSpec, "loop at vertex " + std::to_string(e.u));
        if (e.color >= r)
            throw Error(ErrorKind::InvalidSpec, "color " + std::to_string(e.color) + " outside [0," + std::to_string(r) + ")");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        auto& slot = g.color_[e.u * n + e.v];
        if (slot != kNone)
            throw Error(ErrorKind::DuplicateEdge, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} given twice");
        slot = static_cast<std::uint8_t>(e.color);
        g.color_[e.v * n + e.u] = slot;
        ++g.degree_[e.u];
        ++g.degree_[e.v];
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

std::optional<Color> GeneralGraph::color_of(Vertex u, Vertex v) const noexcept
{
    const auto c = color_[u * n_ + v];
    if (c == kNone)
        return std::nullopt;
    return c;
}

std::size_t GeneralGraph::min_degree() const noexcept
{
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::vector<std::vector<Vertex>> color_partition(const GeneralGraph& g, Color color)
{
    UnionFind uf(g.n());
    for (const auto& e : g.edges())
        if (e.color == color)
            uf.join(e.u, e.v);
    std::vector<std::size_t> slot(g.n(), SIZE_MAX);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto root = uf.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = parts.size();
            parts.emplace_back();
        }
        parts[slot[root]].push_back(v);
    }
    return parts;
}

std::vector<GeneralComponent> general_components(const GeneralGraph& g, Color color)
{
    std::vector<GeneralComponent> out;
    for (auto& part : color_partition(g, color))
        if (part.size() >= 2)
            out.push_back({color, std::move(part)});
    return out;
}

}  // namespace mono
