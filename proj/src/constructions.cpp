#include "mono/constructions.hpp"

#include <string>

namespace mono {

namespace {
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            throw Error(ErrorKind::InvalidSpec, what);
    }
}

void ConstructionSpec::validate() const
{
    switch (variant) {
    case ConstructionVariant::CyclicFactorization:
        require(k >= 1, "cyclic factorization needs k >= 1");
        break;
    case ConstructionVariant::LowerBound:
        require(r >= 2, "lower-bound construction needs r >= 2");
        require(t1 >= 1 && t2 >= 1, "blow-up multiplicities must be >= 1");
        break;
    case ConstructionVariant::DoubleStarGap:
        require(r >= 2, "double-star-gap construction needs r >= 2");
        require(2 <= t1 && t1 <= t2, "double-star-gap construction needs 2 <= t1 <= t2");
        break;
    case ConstructionVariant::CompleteMinusCirculant:
        require(m >= 1 && m <= n, "circulant host needs 1 <= m <= n");
        require(d <= n, "circulant host needs d <= n");
        break;
    case ConstructionVariant::Complete:
        require(m >= 1 && n >= 1, "complete host needs m, n >= 1");
        break;
    }
}

ColoredGraph cyclic_one_factorization(std::size_t k)
{
    require(k >= 1, "cyclic factorization needs k >= 1");
    const auto host = BipartiteGraph::complete(k, k);
    std::vector<ColoredEdge> edges;
    edges.reserve(k * k);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = 0; j < k; ++j)
            edges.push_back({i, j, static_cast<Color>((i + j) % k)});
    return {host, EdgeColoring::from_colored_edges(k, k, k, edges)};
}

ColoredGraph blowup(const BipartiteGraph& pattern_host, const EdgeColoring& pattern_col, std::size_t t1, std::size_t t2)
{
    require(t1 >= 1 && t2 >= 1, "blow-up multiplicities must be >= 1");
    pattern_col.validate_against(pattern_host);
    const std::size_t m = pattern_host.m() * t1;
    const std::size_t n = pattern_host.n() * t2;
    std::vector<ColoredEdge> edges;
    edges.reserve(pattern_host.edge_count() * t1 * t2);
    for (const ColoredEdge& e : pattern_col.colored_edges())
        for (std::size_t a = 0; a < t1; ++a)
            for (std::size_t b = 0; b < t2; ++b)
                edges.push_back({static_cast<Vertex>(e.x * t1 + a), static_cast<Vertex>(e.y * t2 + b), e.color});
    auto col = EdgeColoring::from_colored_edges(m, n, pattern_col.r(), edges);
    auto host = col.union_graph();
    return {std::move(host), std::move(col)};
}

ColoredGraph lower_bound_construction(std::size_t r, std::size_t t1, std::size_t t2)
{
    require(r >= 2, "lower-bound construction needs r >= 2");
    const auto base = cyclic_one_factorization(r + 1);
    std::vector<ColoredEdge> kept;
    for (const ColoredEdge& e : base.coloring.colored_edges())
        if (e.color != r)
            kept.push_back(e);
    auto col = EdgeColoring::from_colored_edges(r + 1, r + 1, r, kept);
    auto host = col.union_graph();
    return blowup(host, col, t1, t2);
}

ColoredGraph double_star_gap_construction(std::size_t r, std::size_t t1, std::size_t t2)
{
    require(r >= 2, "double-star-gap construction needs r >= 2");
    require(2 <= t1 && t1 <= t2, "double-star-gap construction needs 2 <= t1 <= t2");
    const auto base = cyclic_one_factorization(r);
    std::vector<ColoredEdge> edges;
    for (const ColoredEdge& e : base.coloring.colored_edges())
        for (std::size_t a = 0; a < t1; ++a)
            for (std::size_t b = 0; b < t2; ++b)
                if (a != b)
                    edges.push_back({static_cast<Vertex>(e.x * t1 + a), static_cast<Vertex>(e.y * t2 + b), e.color});
    auto col = EdgeColoring::from_colored_edges(r * t1, r * t2, r, edges);
    auto host = col.union_graph();
    return {std::move(host), std::move(col)};
}

BipartiteGraph complete_minus_circulant(std::size_t m, std::size_t n, std::size_t d)
{
    require(m >= 1 && m <= n, "circulant host needs 1 <= m <= n");
    require(d <= n, "circulant host needs d <= n");
    BipartiteGraph::Builder b(m, n);
    for (Vertex x = 0; x < m; ++x)
        for (Vertex y = 0; y < n; ++y)
            if ((y + n - x % n) % n >= d)
                b.add(x, y);
    return std::move(b).build();
}

ColoredGraph generate(const ConstructionSpec& spec)
{
    spec.validate();
    switch (spec.variant) {
    case ConstructionVariant::CyclicFactorization:
        return cyclic_one_factorization(spec.k);
    case ConstructionVariant::LowerBound:
        return lower_bound_construction(spec.r, spec.t1, spec.t2);
    case ConstructionVariant::DoubleStarGap:
        return double_star_gap_construction(spec.r, spec.t1, spec.t2);
    case ConstructionVariant::CompleteMinusCirculant: {
        auto host = complete_minus_circulant(spec.m, spec.n, spec.d);
        auto col = EdgeColoring::single_color(host);
        return {std::move(host), std::move(col)};
    }
    case ConstructionVariant::Complete: {
        auto host = BipartiteGraph::complete(spec.m, spec.n);
        auto col = EdgeColoring::single_color(host);
        return {std::move(host), std::move(col)};
    }
    }
    throw Error(ErrorKind::InvalidSpec, "unknown construction");
}

Certificate certify(const ConstructionSpec& spec, const ColoredGraph& g)
{
    Certificate cert;
    cert.m = g.host.m();
    cert.n = g.host.n();
    cert.edges = g.host.edge_count();
    cert.degrees = degree_profile(g.host);
    if (g.host.edge_count() > 0) {
        cert.largest_component = largest_mono_component(g.host, g.coloring).order();
        cert.largest_double_star = largest_double_star(g.host, g.coloring).order;
    }
    const std::size_t m = cert.m, n = cert.n, r = spec.r;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            cert.checks_passed = false;
            cert.notes += (cert.notes.empty() ? "" : "; ") + what;
        }
    };

    switch (spec.variant) {
    case ConstructionVariant::CyclicFactorization:
        check(cert.largest_component == std::size_t{2}, "every class should be a perfect matching");
        for (const auto& cls : g.coloring.classes())
            check(degree_profile(cls).delta_xy == 1 && degree_profile(cls).delta_yx == 1 && cls.edge_count() == spec.k,
                "class is not a perfect matching");
        break;
    case ConstructionVariant::LowerBound:
        // delta(X,Y) = (1 - 1/(r+1)) n, delta(Y,X) = (1 - 1/(r+1)) m, largest component (m+n)/(r+1)
        check(cert.degrees.delta_xy * (r + 1) == r * n, "delta(X,Y) != (1 - 1/(r+1)) n");
        check(cert.degrees.delta_yx * (r + 1) == r * m, "delta(Y,X) != (1 - 1/(r+1)) m");
        check(cert.largest_component && *cert.largest_component * (r + 1) == m + n, "largest component != (m+n)/(r+1)");
        check(!meets_conjecture_degrees(g.host, r), "strict degree condition unexpectedly holds");
        break;
    case ConstructionVariant::DoubleStarGap:
        check(cert.degrees.delta_xy == n - r, "delta(X,Y) != n - r");
        check(cert.degrees.delta_yx + r >= m, "delta(Y,X) < m - r");
        check(cert.largest_double_star && *cert.largest_double_star <= spec.t1 - 1 + spec.t2, "double star exceeds t1 - 1 + t2");
        if (spec.t1 == 2 && spec.t2 == 2) {
            // K_{2,2} minus a perfect matching is two disjoint edges, so no
            // block yields a component of order t1 + t2.
            cert.component_claim_asserted = false;
            cert.notes += std::string(cert.notes.empty() ? "" : "; ") + "t1 = t2 = 2: component size reported, not asserted";
        } else {
            check(cert.largest_component && *cert.largest_component * r == m + n, "largest component != (m+n)/r");
        }
        break;
    case ConstructionVariant::CompleteMinusCirculant:
        for (Vertex x = 0; x < m; ++x)
            check(g.host.degree_x(x) == n - spec.d, "X-degree != n - d");
        if (m == n)
            for (Vertex y = 0; y < n; ++y)
                check(g.host.degree_y(y) == n - spec.d, "Y-degree != n - d");
        break;
    case ConstructionVariant::Complete:
        check(cert.edges == m * n, "not complete");
        break;
    }
    return cert;
}

}  // namespace mono
