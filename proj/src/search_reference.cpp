#include "mono/search_reference.hpp"

#include <algorithm>

namespace mono::reference {

namespace {
    struct SerialDfs {
        const std::vector<Edge>& edges;
        std::size_t r;
        ComponentGoal goal;
        bool canonical;
        std::vector<RollbackUnionFind> uf;
        std::vector<Color> colors;
        std::uint64_t nodes = 0;

        bool run(std::size_t i, std::size_t used)
        {
            if (i == edges.size())
                return true;
            const std::size_t limit = canonical ? std::min(r, used + 1) : r;
            for (Color c = 0; c < limit; ++c) {
                ++nodes;
                const auto root = uf[c].join_edge(edges[i].x, edges[i].y);
                const bool dead = goal.met(uf[c].counts(root));
                colors[i] = c;
                const bool found = !dead && run(i + 1, std::max<std::size_t>(used, c + 1));
                uf[c].undo();
                if (found)
                    return true;
            }
            return false;
        }
    };

    /// Component (xs, ys) counts per color by relabelling from scratch.
    bool any_component_meets(const BipartiteGraph& host, std::size_t r, const std::vector<Edge>& edges,
                             const std::vector<Color>& colors, const ComponentGoal& goal)
    {
        const std::size_t m = host.m();
        for (Color c = 0; c < r; ++c) {
            UnionFind uf(m + host.n());
            bool any = false;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (colors[i] == c) {
                    uf.join(edges[i].x, m + edges[i].y);
                    any = true;
                }
            if (!any)
                continue;
            std::vector<std::uint32_t> xs(m + host.n(), 0), ys(m + host.n(), 0);
            std::vector<bool> touched(m + host.n(), false);
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (colors[i] == c) {
                    touched[edges[i].x] = true;
                    touched[m + edges[i].y] = true;
                }
            for (std::size_t v = 0; v < m + host.n(); ++v)
                if (touched[v])
                    ++(v < m ? xs : ys)[uf.find(v)];
            for (std::size_t v = 0; v < m + host.n(); ++v)
                if (touched[v] && uf.find(v) == v && goal.met(xs[v], ys[v]))
                    return true;
        }
        return false;
    }

    std::size_t largest_order(const BipartiteGraph& host, std::size_t r, const std::vector<Edge>& edges, const std::vector<Color>& colors)
    {
        const std::size_t m = host.m();
        std::size_t best = 0;
        for (Color c = 0; c < r; ++c) {
            UnionFind uf(m + host.n());
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (colors[i] == c) {
                    uf.join(edges[i].x, m + edges[i].y);
                    best = std::max(best, uf.size_of(edges[i].x));
                }
        }
        return best;
    }

    /// Advances colors to the next string in base r; false after the last one.
    bool next_coloring(std::vector<Color>& colors, std::size_t r)
    {
        for (std::size_t i = colors.size(); i-- > 0;) {
            if (++colors[i] < r)
                return true;
            colors[i] = 0;
        }
        return false;
    }
}

AvoidResult find_avoiding_coloring_serial(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal, bool canonicalize_colors)
{
    const auto edges = host.edges();
    SerialDfs dfs{edges, r, goal, canonicalize_colors,
                  std::vector<RollbackUnionFind>(r, RollbackUnionFind(static_cast<std::uint32_t>(host.m()), static_cast<std::uint32_t>(host.n()))),
                  std::vector<Color>(edges.size(), 0)};
    AvoidResult out;
    out.found = dfs.run(0, 0);
    out.examined = dfs.nodes;
    if (out.found)
        out.colors = dfs.colors;
    return out;
}

std::optional<std::vector<Color>> naive_find_avoiding(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal)
{
    const auto edges = host.edges();
    std::vector<Color> colors(edges.size(), 0);
    do {
        if (!any_component_meets(host, r, edges, colors, goal))
            return colors;
    } while (next_coloring(colors, r));
    return std::nullopt;
}

std::pair<std::size_t, std::vector<Color>> naive_min_max(const BipartiteGraph& host, std::size_t r)
{
    const auto edges = host.edges();
    std::vector<Color> colors(edges.size(), 0);
    std::size_t best = SIZE_MAX;
    std::vector<Color> witness;
    do {
        const std::size_t v = largest_order(host, r, edges, colors);
        if (v < best) {
            best = v;
            witness = colors;
        }
    } while (next_coloring(colors, r));
    return {best, witness};
}

std::optional<std::uint64_t> first_random_counterexample_serial(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal,
                                                                std::uint64_t seed, std::uint64_t budget)
{
    const auto edges = host.edges();
    std::vector<Color> colors(edges.size());
    for (std::uint64_t s = 0; s < budget; ++s) {
        auto rng = SplitMix64::for_sample(seed, s);
        for (auto& c : colors)
            c = rng.below(static_cast<std::uint32_t>(r));
        if (!any_component_meets(host, r, edges, colors, goal))
            return s;
    }
    return std::nullopt;
}

}  // namespace mono::reference
