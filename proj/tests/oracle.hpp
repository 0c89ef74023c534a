// Independent brute-force oracles for tests. Nothing here calls into the
// library's component, union-find, or search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

struct CEdge {
    unsigned x, y, c;
};

/// Largest monochromatic component order by BFS over each color's edges.
/// Vertices 0..m-1 are X, m..m+n-1 are Y.
inline std::size_t largest_component(std::size_t m, std::size_t n, const std::vector<CEdge>& edges, unsigned r)
{
    std::size_t best = 0;
    for (unsigned c = 0; c < r; ++c) {
        std::vector<std::vector<std::size_t>> adj(m + n);
        for (const auto& e : edges)
            if (e.c == c) {
                adj[e.x].push_back(m + e.y);
                adj[m + e.y].push_back(e.x);
            }
        std::vector<char> seen(m + n, 0);
        for (std::size_t s = 0; s < m + n; ++s) {
            if (seen[s] || adj[s].empty())
                continue;
            std::size_t size = 0;
            std::queue<std::size_t> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                auto v = q.front();
                q.pop();
                ++size;
                for (auto w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
            best = std::max(best, size);
        }
    }
    return best;
}

/// Components of one color as (xs, ys) counts, by BFS.
inline std::vector<std::pair<std::size_t, std::size_t>> component_sides(std::size_t m, std::size_t n,
                                                                        const std::vector<CEdge>& edges, unsigned c)
{
    std::vector<std::vector<std::size_t>> adj(m + n);
    for (const auto& e : edges)
        if (e.c == c) {
            adj[e.x].push_back(m + e.y);
            adj[m + e.y].push_back(e.x);
        }
    std::vector<char> seen(m + n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t s = 0; s < m + n; ++s) {
        if (seen[s] || adj[s].empty())
            continue;
        std::pair<std::size_t, std::size_t> cnt{0, 0};
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            (v < m ? cnt.first : cnt.second)++;
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        out.push_back(cnt);
    }
    return out;
}

/// Largest double star of an uncolored bipartite edge list: max deg(x)+deg(y) over edges.
inline std::size_t double_star(std::size_t m, std::size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges)
{
    std::vector<std::size_t> dx(m, 0), dy(n, 0);
    for (auto [x, y] : edges) {
        ++dx[x];
        ++dy[y];
    }
    std::size_t best = 0;
    for (auto [x, y] : edges)
        best = std::max(best, dx[x] + dy[y]);
    return best;
}

/// Min over all r^|E| colorings of the largest component; returns (value, lex-least optimal coloring).
inline std::pair<std::size_t, std::vector<unsigned>> min_max(std::size_t m, std::size_t n,
                                                              const std::vector<std::pair<unsigned, unsigned>>& edges, unsigned r)
{
    const std::size_t e = edges.size();
    std::vector<unsigned> colors(e, 0);
    std::size_t best = SIZE_MAX;
    std::vector<unsigned> witness;
    while (true) {
        std::vector<CEdge> ce;
        for (std::size_t i = 0; i < e; ++i)
            ce.push_back({edges[i].first, edges[i].second, colors[i]});
        const auto v = largest_component(m, n, ce, r);
        if (v < best) {
            best = v;
            witness = colors;
        }
        std::size_t i = e;
        while (i > 0 && colors[i - 1] == r - 1)
            colors[--i] = 0;
        if (i == 0)
            break;
        ++colors[i - 1];
    }
    return {e == 0 ? 0 : best, witness};
}

/// Whether some subset of `sizes` sums into [lo, total - lo].
inline bool split_exists(const std::vector<std::size_t>& sizes, std::size_t lo)
{
    std::size_t total = 0;
    for (auto s : sizes)
        total += s;
    if (2 * lo > total)
        return false;
    std::vector<char> reach(total + 1, 0);
    reach[0] = 1;
    for (auto s : sizes)
        for (std::size_t t = total; t + 1 > s; --t)
            if (reach[t - s])
                reach[t] = 1;
    for (std::size_t t = lo; t + lo <= total; ++t)
        if (reach[t])
            return true;
    return false;
}

}  // namespace oracle
