#include "mono/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mono/union_find.hpp"

namespace mono {

namespace {
    std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

    template <typename F>
    void for_each_bit(const std::uint64_t* row, std::size_t words, F&& f)
    {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }
}

BipartiteGraph::Builder::Builder(std::size_t m, std::size_t n) : m_(m), n_(n), words_(words_for(n)), rows_(m * words_for(n), 0)
{
}

bool BipartiteGraph::Builder::contains(Vertex x, Vertex y) const
{
    return (rows_[x * words_ + y / 64] >> (y % 64)) & 1U;
}

BipartiteGraph::Builder& BipartiteGraph::Builder::add(Vertex x, Vertex y)
{
    if (x >= m_ || y >= n_)
        throw Error(ErrorKind::IndexOutOfRange,
            "edge (" + std::to_string(x) + "," + std::to_string(y) + ") outside " + std::to_string(m_) + "x" + std::to_string(n_));
    if (contains(x, y))
        throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(x) + "," + std::to_string(y) + ") given twice");
    rows_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
    return *this;
}

BipartiteGraph BipartiteGraph::Builder::build() &&
{
    BipartiteGraph g;
    g.m_ = m_;
    g.n_ = n_;
    g.words_x_ = words_;
    g.words_y_ = words_for(m_);
    g.rows_ = std::move(rows_);
    g.cols_.assign(n_ * g.words_y_, 0);
    g.deg_x_.assign(m_, 0);
    g.deg_y_.assign(n_, 0);
    for (std::size_t x = 0; x < m_; ++x) {
        const std::uint64_t* row = &g.rows_[x * g.words_x_];
        std::size_t deg = 0;
        for (std::size_t w = 0; w < g.words_x_; ++w)
            deg += std::popcount(row[w]);
        g.deg_x_[x] = deg;
        g.edge_count_ += deg;
        for_each_bit(row, g.words_x_, [&](Vertex y) {
            g.cols_[y * g.words_y_ + x / 64] |= std::uint64_t{1} << (x % 64);
            ++g.deg_y_[y];
        });
    }
    return g;
}

BipartiteGraph BipartiteGraph::from_edge_list(std::size_t m, std::size_t n, std::span<const Edge> edges)
{
    Builder b(m, n);
    for (const Edge& e : edges)
        b.add(e.x, e.y);
    return std::move(b).build();
}

BipartiteGraph BipartiteGraph::complete(std::size_t m, std::size_t n)
{
    Builder b(m, n);
    for (Vertex x = 0; x < m; ++x)
        for (Vertex y = 0; y < n; ++y)
            b.add(x, y);
    return std::move(b).build();
}

std::vector<Vertex> BipartiteGraph::neighbors_x(Vertex x) const
{
    std::vector<Vertex> out;
    out.reserve(deg_x_[x]);
    for_each_bit(&rows_[x * words_x_], words_x_, [&](Vertex y) { out.push_back(y); });
    return out;
}

std::vector<Vertex> BipartiteGraph::neighbors_y(Vertex y) const
{
    std::vector<Vertex> out;
    out.reserve(deg_y_[y]);
    for_each_bit(&cols_[y * words_y_], words_y_, [&](Vertex x) { out.push_back(x); });
    return out;
}

std::vector<Edge> BipartiteGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex x = 0; x < m_; ++x)
        for_each_bit(&rows_[x * words_x_], words_x_, [&](Vertex y) { out.push_back({x, y}); });
    return out;
}

BipartiteGraph BipartiteGraph::transposed() const
{
    BipartiteGraph t = *this;
    std::swap(t.m_, t.n_);
    std::swap(t.words_x_, t.words_y_);
    std::swap(t.rows_, t.cols_);
    std::swap(t.deg_x_, t.deg_y_);
    return t;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const
{
    return m_ == other.m_ && n_ == other.n_ && rows_ == other.rows_;
}

EdgeColoring EdgeColoring::from_colored_edges(std::size_t m, std::size_t n, std::size_t r, std::span<const ColoredEdge> edges)
{
    if (r == 0)
        throw Error(ErrorKind::InvalidSpec, "a coloring needs at least one color");
    std::vector<BipartiteGraph::Builder> builders(r, BipartiteGraph::Builder(m, n));
    BipartiteGraph::Builder seen(m, n);
    for (const ColoredEdge& e : edges) {
        if (e.color >= r)
            throw Error(ErrorKind::InvalidSpec, "color " + std::to_string(e.color) + " outside [0," + std::to_string(r) + ")");
        seen.add(e.x, e.y);
        builders[e.color].add(e.x, e.y);
    }
    EdgeColoring col;
    col.m_ = m;
    col.n_ = n;
    col.classes_.reserve(r);
    for (auto& b : builders)
        col.classes_.push_back(std::move(b).build());
    return col;
}

EdgeColoring EdgeColoring::from_host_order(const BipartiteGraph& host, std::size_t r, std::span<const Color> colors)
{
    const auto edges = host.edges();
    if (colors.size() != edges.size())
        throw Error(ErrorKind::ColoringMismatch,
            std::to_string(colors.size()) + " colors for " + std::to_string(edges.size()) + " edges");
    std::vector<ColoredEdge> colored(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        colored[i] = {edges[i].x, edges[i].y, colors[i]};
    return from_colored_edges(host.m(), host.n(), r, colored);
}

EdgeColoring EdgeColoring::single_color(const BipartiteGraph& host, std::size_t r)
{
    if (r == 0)
        throw Error(ErrorKind::InvalidSpec, "a coloring needs at least one color");
    EdgeColoring col;
    col.m_ = host.m();
    col.n_ = host.n();
    col.classes_.push_back(host);
    for (std::size_t c = 1; c < r; ++c)
        col.classes_.push_back(BipartiteGraph::Builder(host.m(), host.n()).build());
    return col;
}

std::optional<Color> EdgeColoring::color_of(Vertex x, Vertex y) const noexcept
{
    for (Color c = 0; c < classes_.size(); ++c)
        if (classes_[c].has_edge(x, y))
            return c;
    return std::nullopt;
}

std::vector<ColoredEdge> EdgeColoring::colored_edges() const
{
    std::vector<ColoredEdge> out;
    for (Color c = 0; c < classes_.size(); ++c)
        for (const Edge& e : classes_[c].edges())
            out.push_back({e.x, e.y, c});
    std::sort(out.begin(), out.end());
    return out;
}

BipartiteGraph EdgeColoring::union_graph() const
{
    BipartiteGraph::Builder b(m_, n_);
    for (const auto& cls : classes_)
        for (const Edge& e : cls.edges())
            b.add(e.x, e.y);
    return std::move(b).build();
}

void EdgeColoring::validate_against(const BipartiteGraph& host) const
{
    if (host.m() != m_ || host.n() != n_)
        throw Error(ErrorKind::ColoringMismatch, "coloring and host have different side sizes");
    std::size_t total = 0;
    for (const auto& cls : classes_) {
        total += cls.edge_count();
        for (const Edge& e : cls.edges())
            if (!host.has_edge(e.x, e.y))
                throw Error(ErrorKind::ColoringMismatch,
                    "colored edge (" + std::to_string(e.x) + "," + std::to_string(e.y) + ") is not a host edge");
    }
    if (total != host.edge_count())
        throw Error(ErrorKind::ColoringMismatch,
            std::to_string(total) + " colored edges but host has " + std::to_string(host.edge_count()));
}

EdgeColoring EdgeColoring::transposed() const
{
    EdgeColoring t;
    t.m_ = n_;
    t.n_ = m_;
    for (const auto& cls : classes_)
        t.classes_.push_back(cls.transposed());
    return t;
}

DegreeProfile degree_profile(const BipartiteGraph& g)
{
    DegreeProfile p;
    p.delta_xy = g.m() == 0 ? 0 : g.n();
    p.delta_yx = g.n() == 0 ? 0 : g.m();
    for (Vertex x = 0; x < g.m(); ++x)
        p.delta_xy = std::min(p.delta_xy, g.degree_x(x));
    for (Vertex y = 0; y < g.n(); ++y)
        p.delta_yx = std::min(p.delta_yx, g.degree_y(y));
    const auto e = static_cast<std::int64_t>(g.edge_count());
    p.avg_xy = g.m() == 0 ? Rational(0) : Rational(e, static_cast<std::int64_t>(g.m()));
    p.avg_yx = g.n() == 0 ? Rational(0) : Rational(e, static_cast<std::int64_t>(g.n()));
    return p;
}

std::vector<Component> components_of(const BipartiteGraph& g, Color color)
{
    const std::size_t m = g.m();
    UnionFind uf(m + g.n());
    for (Vertex x = 0; x < m; ++x)
        for (Vertex y : g.neighbors_x(x))
            uf.join(x, m + y);

    // Components are keyed by their smallest X-index; every component with an
    // edge has an X-vertex, and x runs in increasing order.
    std::vector<std::size_t> slot(m + g.n(), SIZE_MAX);
    std::vector<Component> out;
    for (Vertex x = 0; x < m; ++x) {
        if (g.degree_x(x) == 0)
            continue;
        const std::size_t root = uf.find(x);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.push_back(Component{color, {}, {}});
        }
        out[slot[root]].xs.push_back(x);
    }
    for (Vertex y = 0; y < g.n(); ++y) {
        if (g.degree_y(y) == 0)
            continue;
        out[slot[uf.find(m + y)]].ys.push_back(y);
    }
    return out;
}

std::vector<Component> mono_components(const BipartiteGraph& host, const EdgeColoring& col)
{
    col.validate_against(host);
    std::vector<Component> out;
    for (Color c = 0; c < col.r(); ++c) {
        auto comps = components_of(col.color_class(c), c);
        std::move(comps.begin(), comps.end(), std::back_inserter(out));
    }
    return out;
}

Component largest_mono_component(const BipartiteGraph& host, const EdgeColoring& col)
{
    if (host.edge_count() == 0)
        throw Error(ErrorKind::EmptyGraph, "host has no edges");
    auto comps = mono_components(host, col);
    // Components arrive in (color, min X) order, so the first maximum wins ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].order() > comps[best].order())
            best = i;
    return std::move(comps[best]);
}

namespace {
    void scan_double_stars(const BipartiteGraph& g, Color color, std::optional<DoubleStar>& best)
    {
        for (Vertex x = 0; x < g.m(); ++x) {
            const std::size_t dx = g.degree_x(x);
            if (dx == 0 || (best && dx + g.m() <= best->order))
                continue;
            for (Vertex y : g.neighbors_x(x)) {
                const std::size_t order = dx + g.degree_y(y);
                if (!best || order > best->order)
                    best = DoubleStar{color, x, y, order};
            }
        }
    }
}

DoubleStar largest_double_star(const BipartiteGraph& host, const EdgeColoring& col)
{
    col.validate_against(host);
    if (host.edge_count() == 0)
        throw Error(ErrorKind::EmptyGraph, "host has no edges");
    std::optional<DoubleStar> best;
    for (Color c = 0; c < col.r(); ++c)
        scan_double_stars(col.color_class(c), c, best);
    return *best;
}

DoubleStar uncolored_largest_double_star(const BipartiteGraph& g)
{
    if (g.edge_count() == 0)
        throw Error(ErrorKind::EmptyGraph, "graph has no edges");
    std::optional<DoubleStar> best;
    scan_double_stars(g, 0, best);
    return *best;
}

bool meets_conjecture_degrees(const BipartiteGraph& g, std::size_t r)
{
    if (r < 2)
        throw Error(ErrorKind::InvalidSpec, "the degree condition needs r >= 2");
    const auto p = degree_profile(g);
    // delta > (r/(r+1)) * side  <=>  delta * (r+1) > r * side
    return p.delta_xy * (r + 1) > r * g.n() && p.delta_yx * (r + 1) > r * g.m();
}

}  // namespace mono
