#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mono/error.hpp"
#include "mono/rational.hpp"

namespace mono {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

struct Edge {
    Vertex x = 0;
    Vertex y = 0;
    auto operator<=>(const Edge&) const = default;
};

struct ColoredEdge {
    Vertex x = 0;
    Vertex y = 0;
    Color color = 0;
    auto operator<=>(const ColoredEdge&) const = default;
};

/// Simple (X,Y)-bipartite graph, |X| = m, |Y| = n. X- and Y-indices are
/// separate namespaces. Adjacency is stored as dense bit rows in both
/// directions; the object is immutable once built.
class BipartiteGraph {
public:
    class Builder {
    public:
        Builder(std::size_t m, std::size_t n);

        /// Throws IndexOutOfRange or DuplicateEdge.
        Builder& add(Vertex x, Vertex y);
        bool contains(Vertex x, Vertex y) const;
        BipartiteGraph build() &&;

    private:
        friend class BipartiteGraph;
        std::size_t m_, n_, words_;
        std::vector<std::uint64_t> rows_;
    };

    BipartiteGraph() = default;

    static BipartiteGraph from_edge_list(std::size_t m, std::size_t n, std::span<const Edge> edges);
    static BipartiteGraph complete(std::size_t m, std::size_t n);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_edge(Vertex x, Vertex y) const noexcept
    {
        return (rows_[x * words_x_ + y / 64] >> (y % 64)) & 1U;
    }

    std::size_t degree_x(Vertex x) const noexcept { return deg_x_[x]; }
    std::size_t degree_y(Vertex y) const noexcept { return deg_y_[y]; }

    std::vector<Vertex> neighbors_x(Vertex x) const;
    std::vector<Vertex> neighbors_y(Vertex y) const;

    /// Edges sorted by (x, y).
    std::vector<Edge> edges() const;

    /// Swaps the roles of X and Y.
    BipartiteGraph transposed() const;

    bool operator==(const BipartiteGraph& other) const;

private:
    std::size_t m_ = 0, n_ = 0;
    std::size_t words_x_ = 0, words_y_ = 0;
    std::vector<std::uint64_t> rows_;   // m_ rows of n_ bits
    std::vector<std::uint64_t> cols_;   // n_ rows of m_ bits
    std::vector<std::size_t> deg_x_, deg_y_;
    std::size_t edge_count_ = 0;
};

/// An r-edge-coloring, kept as r edge-disjoint color-class graphs on the
/// same (m, n) vertex sets.
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// Throws IndexOutOfRange, DuplicateEdge (an edge colored twice) or
    /// InvalidSpec (r == 0 or a color >= r).
    static EdgeColoring from_colored_edges(std::size_t m, std::size_t n, std::size_t r,
                                           std::span<const ColoredEdge> edges);

    /// colors[i] is the color of host.edges()[i].
    static EdgeColoring from_host_order(const BipartiteGraph& host, std::size_t r,
                                        std::span<const Color> colors);

    static EdgeColoring single_color(const BipartiteGraph& host, std::size_t r = 1);

    std::size_t r() const noexcept { return classes_.size(); }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }

    const BipartiteGraph& color_class(Color c) const { return classes_.at(c); }
    std::span<const BipartiteGraph> classes() const noexcept { return classes_; }

    std::optional<Color> color_of(Vertex x, Vertex y) const noexcept;

    /// Sorted by (x, y).
    std::vector<ColoredEdge> colored_edges() const;

    /// Union of the color classes.
    BipartiteGraph union_graph() const;

    /// Throws ColoringMismatch unless the union of the classes is exactly host.
    void validate_against(const BipartiteGraph& host) const;

    EdgeColoring transposed() const;

    bool operator==(const EdgeColoring& other) const = default;

private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<BipartiteGraph> classes_;
};

/// A monochromatic component. Isolated vertices never form one, so a
/// component always holds at least one edge.
struct Component {
    Color color = 0;
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;

    std::size_t order() const noexcept { return xs.size() + ys.size(); }
    bool operator==(const Component&) const = default;
};

/// Double star centered on the colored edge (center_x, center_y); its
/// order is deg_c(center_x) + deg_c(center_y).
struct DoubleStar {
    Color color = 0;
    Vertex center_x = 0;
    Vertex center_y = 0;
    std::size_t order = 0;
    bool operator==(const DoubleStar&) const = default;
};

struct DegreeProfile {
    std::size_t delta_xy = 0;
    std::size_t delta_yx = 0;
    Rational avg_xy;
    Rational avg_yx;
};

DegreeProfile degree_profile(const BipartiteGraph& g);

/// Components of a single graph, labelled with `color`, sorted by smallest X-index.
std::vector<Component> components_of(const BipartiteGraph& g, Color color = 0);

/// All monochromatic components, ordered by color then smallest X-index.
std::vector<Component> mono_components(const BipartiteGraph& host, const EdgeColoring& col);

/// Throws EmptyGraph when host has no edges.
Component largest_mono_component(const BipartiteGraph& host, const EdgeColoring& col);
DoubleStar largest_double_star(const BipartiteGraph& host, const EdgeColoring& col);
DoubleStar uncolored_largest_double_star(const BipartiteGraph& g);

/// delta(X,Y) > (1 - 1/(r+1)) n and delta(Y,X) > (1 - 1/(r+1)) m.
bool meets_conjecture_degrees(const BipartiteGraph& g, std::size_t r);

}  // namespace mono
