#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mono/bigraph.hpp"

namespace mono {

struct ColoredGraph {
    BipartiteGraph host;
    EdgeColoring coloring;
};

enum class ConstructionVariant { CyclicFactorization, LowerBound, DoubleStarGap, CompleteMinusCirculant, Complete };

struct ConstructionSpec {
    ConstructionVariant variant = ConstructionVariant::CyclicFactorization;
    std::size_t r = 2;
    std::size_t t1 = 1;
    std::size_t t2 = 1;
    std::size_t k = 1;
    std::size_t m = 1, n = 1, d = 0;

    /// Throws InvalidSpec when the parameters are outside the variant's domain.
    void validate() const;
};

/// Facts about a generated graph, recomputed from scratch.
struct Certificate {
    std::size_t m = 0, n = 0, edges = 0;
    DegreeProfile degrees;
    std::optional<std::size_t> largest_component;
    std::optional<std::size_t> largest_double_star;
    bool checks_passed = true;
    /// False when a value is reported but carries no claim (see double_star_gap_construction).
    bool component_claim_asserted = true;
    std::string notes;
};

/// K_{k,k} colored by (i + j) mod k; every class is a perfect matching.
ColoredGraph cyclic_one_factorization(std::size_t k);

/// Clone pattern X-vertex p into [p*t1, (p+1)*t1) and Y-vertex q into
/// [q*t2, (q+1)*t2); each pattern edge becomes a K_{t1,t2} in its color.
ColoredGraph blowup(const BipartiteGraph& pattern_host, const EdgeColoring& pattern_col, std::size_t t1, std::size_t t2);

/// Cyclic factorization of K_{r+1,r+1} without its last class, blown up by (t1, t2).
/// Sits exactly on the degree threshold and has no component larger than (m+n)/(r+1).
ColoredGraph lower_bound_construction(std::size_t r, std::size_t t1, std::size_t t2);

/// Cyclic factorization of K_{r,r} blown up by (t1, t2), each block losing the
/// matching {(clone i, clone i) : i < t1}. Requires 2 <= t1 <= t2.
ColoredGraph double_star_gap_construction(std::size_t r, std::size_t t1, std::size_t t2);

/// K_{m,n} minus {(i, (i+k) mod n) : k < d}. Requires m <= n and d <= n.
BipartiteGraph complete_minus_circulant(std::size_t m, std::size_t n, std::size_t d);

ColoredGraph generate(const ConstructionSpec& spec);

/// Recomputes degree profile, largest component and double star and checks
/// them against the variant's closed-form claims.
Certificate certify(const ConstructionSpec& spec, const ColoredGraph& g);

}  // namespace mono
