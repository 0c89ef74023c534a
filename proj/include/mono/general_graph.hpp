#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mono/bigraph.hpp"

namespace mono {

struct GeneralEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color color = 0;
    auto operator<=>(const GeneralEdge&) const = default;
};

/// Simple undirected graph on [0, n) with a total r-coloring of its edges.
class GeneralGraph {
public:
    GeneralGraph() = default;

    /// Edges are normalized to u < v. Throws IndexOutOfRange, DuplicateEdge,
    /// or InvalidSpec (loops, color >= r).
    static GeneralGraph from_edges(std::size_t n, std::size_t r, std::span<const GeneralEdge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sorted by (u, v).
    std::span<const GeneralEdge> edges() const noexcept { return edges_; }
    std::optional<Color> color_of(Vertex u, Vertex v) const noexcept;
    std::size_t degree(Vertex v) const noexcept { return degree_[v]; }
    std::size_t min_degree() const noexcept;

private:
    static constexpr std::uint8_t kNone = 0xFF;

    std::size_t n_ = 0, r_ = 0;
    std::vector<GeneralEdge> edges_;
    std::vector<std::uint8_t> color_;   // n x n, kNone when absent
    std::vector<std::size_t> degree_;
};

struct GeneralComponent {
    Color color = 0;
    std::vector<Vertex> vertices;
    std::size_t order() const noexcept { return vertices.size(); }
};

/// Components of color c with at least one edge, by smallest vertex.
std::vector<GeneralComponent> general_components(const GeneralGraph& g, Color color);

/// Partition of V(G) into color-c components (isolated vertices included as singletons).
std::vector<std::vector<Vertex>> color_partition(const GeneralGraph& g, Color color);

}  // namespace mono
