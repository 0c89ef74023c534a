#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace mono {

/// Union-find over the vertices of an (X,Y)-bipartite graph, X-vertex x as
/// element x and Y-vertex y as element m + y. Every root carries how many
/// X- and Y-vertices its set holds.
///
/// Union by size without path compression, so every join can be undone in
/// O(1) by popping the history stack.
class RollbackUnionFind {
public:
    struct Counts {
        std::uint32_t xs = 0;
        std::uint32_t ys = 0;
        std::uint32_t order() const noexcept { return xs + ys; }
    };

    RollbackUnionFind() = default;

    RollbackUnionFind(std::uint32_t m, std::uint32_t n) : m_(m), parent_(m + n), counts_(m + n)
    {
        std::iota(parent_.begin(), parent_.end(), 0U);
        for (std::uint32_t v = 0; v < m + n; ++v)
            counts_[v] = v < m ? Counts{1, 0} : Counts{0, 1};
        history_.reserve(m + n);
    }

    std::uint32_t find(std::uint32_t v) const noexcept
    {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }

    /// Joins the sets of X-vertex x and Y-vertex y. Returns the root of the
    /// merged set. A no-op join still pushes a history entry so that every
    /// call pairs with exactly one undo().
    std::uint32_t join_edge(std::uint32_t x, std::uint32_t y) noexcept
    {
        std::uint32_t a = find(x);
        std::uint32_t b = find(m_ + y);
        if (a == b) {
            history_.push_back(kNoop);
            return a;
        }
        if (counts_[a].order() < counts_[b].order() || (counts_[a].order() == counts_[b].order() && b < a))
            std::swap(a, b);
        parent_[b] = a;
        counts_[a].xs += counts_[b].xs;
        counts_[a].ys += counts_[b].ys;
        history_.push_back(b);
        return a;
    }

    void undo() noexcept
    {
        const std::uint32_t b = history_.back();
        history_.pop_back();
        if (b == kNoop)
            return;
        const std::uint32_t a = parent_[b];
        counts_[a].xs -= counts_[b].xs;
        counts_[a].ys -= counts_[b].ys;
        parent_[b] = b;
    }

    const Counts& counts(std::uint32_t root) const noexcept { return counts_[root]; }
    std::size_t depth() const noexcept { return history_.size(); }

private:
    static constexpr std::uint32_t kNoop = UINT32_MAX;

    std::uint32_t m_ = 0;
    std::vector<std::uint32_t> parent_;
    std::vector<Counts> counts_;
    std::vector<std::uint32_t> history_;
};

/// Plain union-find with path halving for one-shot component labelling.
class UnionFind {
public:
    explicit UnionFind(std::size_t size) : parent_(size), size_(size, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v) noexcept
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool join(std::size_t a, std::size_t b) noexcept
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size_of(std::size_t v) noexcept { return size_[find(v)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace mono
