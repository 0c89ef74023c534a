#include "mono/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace mono {

namespace {
    Rational q(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

    void require_colors(const EdgeColoring& col, std::size_t r, const char* check)
    {
        if (col.r() != r)
            throw Error(ErrorKind::ColoringMismatch,
                std::string(check) + " needs a " + std::to_string(r) + "-coloring, got " + std::to_string(col.r()) + " colors");
    }

    /// Fills largest_order / witness / holds / margin for "some component on >= target vertices".
    void settle_component_target(Verdict& v, const BipartiteGraph& host, const EdgeColoring& col)
    {
        col.validate_against(host);
        if (host.edge_count() == 0) {
            v.holds = v.target <= 0;
            v.margin = -v.target;
            return;
        }
        Component best = largest_mono_component(host, col);
        v.largest_order = best.order();
        v.holds = q(best.order()) >= v.target;
        v.margin = q(best.order()) - v.target;
        v.witness = std::move(best);
    }
}

bool two_color_degrees_hold(const BipartiteGraph& host)
{
    const auto p = degree_profile(host);
    return 3 * p.delta_xy > 2 * host.n() && 3 * p.delta_yx > 2 * host.m();
}

Verdict check_theorem_two_colors(const BipartiteGraph& host, const EdgeColoring& col)
{
    require_colors(col, 2, "r2");
    Verdict v;
    v.check = "r2";
    v.applicable = two_color_degrees_hold(host);
    v.target = Rational(static_cast<std::int64_t>(host.m() + host.n()), 2);
    settle_component_target(v, host, col);
    return v;
}

Verdict check_conjecture_instance(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r, bool refined)
{
    if (r < 2)
        throw Error(ErrorKind::InvalidSpec, "conjecture check needs r >= 2");
    require_colors(col, r, "conjecture");
    Verdict v;
    v.check = refined ? "conjecture-refined" : "conjecture";
    if (refined) {
        const auto p = degree_profile(host);
        const bool weak_x = p.delta_xy * (r + 1) >= r * host.n();
        const bool weak_y = p.delta_yx * (r + 1) >= r * host.m();
        const bool both_equal = p.delta_xy * (r + 1) == r * host.n() && p.delta_yx * (r + 1) == r * host.m();
        v.applicable = weak_x && weak_y && !both_equal;
        v.note = "refined degree condition is recorded only; no theorem backs it";
    } else {
        v.applicable = meets_conjecture_degrees(host, r);
    }
    v.target = Rational(static_cast<std::int64_t>(host.m() + host.n()), static_cast<std::int64_t>(r));
    settle_component_target(v, host, col);
    return v;
}

bool tetel_degrees_hold(const BipartiteGraph& host, std::size_t r)
{
    const std::size_t m = std::min(host.m(), host.n());
    const std::size_t n = std::max(host.m(), host.n());
    if (m == 0)
        return false;
    const auto p = degree_profile(host);
    const std::size_t d_small = host.m() <= host.n() ? p.delta_xy : p.delta_yx;  // small side -> large side
    const std::size_t d_large = host.m() <= host.n() ? p.delta_yx : p.delta_xy;
    const Rational ratio = q(m) / q(n);
    Rational r5 = 1;
    for (int i = 0; i < 5; ++i)
        r5 *= q(r);
    const Rational gamma = ratio * ratio * ratio / (128 * r5);
    return q(d_small) > (1 - gamma) * q(n) && q(d_large) > (1 - gamma) * q(m);
}

Verdict check_tetel_instance(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r)
{
    if (r < 2)
        throw Error(ErrorKind::InvalidSpec, "power check needs r >= 2");
    require_colors(col, r, "power");
    Verdict v;
    v.check = "power";
    v.applicable = tetel_degrees_hold(host, r);
    v.target = Rational(static_cast<std::int64_t>(host.m() + host.n()), static_cast<std::int64_t>(r));
    settle_component_target(v, host, col);
    return v;
}

Verdict check_complete_bound(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r)
{
    if (r < 1)
        throw Error(ErrorKind::InvalidSpec, "complete-host check needs r >= 1");
    require_colors(col, r, "complete");
    Verdict v;
    v.check = "complete";
    v.applicable = host.m() >= 1 && host.n() >= 1 && host.edge_count() == host.m() * host.n();
    v.target = Rational(static_cast<std::int64_t>(host.m() + host.n()), static_cast<std::int64_t>(r));
    settle_component_target(v, host, col);
    return v;
}

bool additive_degrees_hold(const BipartiteGraph& host)
{
    const std::size_t m = host.m(), n = host.n(), total = m + n;
    const auto p = degree_profile(host);
    // Symmetric in the two sides once the smaller one is called X.
    return 4 * std::min(m, n) > total && 8 * p.delta_xy + total >= 8 * n && 8 * p.delta_yx + total >= 8 * m;
}

Verdict check_additive_theorem(const BipartiteGraph& host, const EdgeColoring& col)
{
    require_colors(col, 2, "additive");
    Verdict v;
    v.check = "additive";
    v.applicable = additive_degrees_hold(host);
    v.target = Rational(static_cast<std::int64_t>(host.m() + host.n()), 2);
    const auto comps = mono_components(host, col);
    const Rational half_m = Rational(static_cast<std::int64_t>(host.m()), 2);
    const Rational half_n = Rational(static_cast<std::int64_t>(host.n()), 2);
    std::optional<Rational> best_margin;
    for (const auto& c : comps) {
        v.largest_order = std::max(v.largest_order, c.order());
        const Rational mx = q(c.xs.size()) - half_m;
        const Rational my = q(c.ys.size()) - half_n;
        const Rational margin = std::min(mx, my);
        if (!best_margin || margin > *best_margin || (margin == *best_margin && c.order() > v.witness->order())) {
            best_margin = margin;
            v.witness = c;
        }
    }
    if (!best_margin) {
        v.margin = -std::max(half_m, half_n);
        v.holds = false;
        return v;
    }
    v.margin = *best_margin;
    v.holds = *best_margin >= 0;
    return v;
}

StabilityReport stability_report(const BipartiteGraph& g, std::size_t r)
{
    if (g.m() == 0 || g.n() == 0)
        throw Error(ErrorKind::EmptyGraph, "graph has an empty side");
    const Rational raw = 1 - Rational(static_cast<std::int64_t>(r * g.edge_count()), static_cast<std::int64_t>(g.m() * g.n()));
    return stability_report(g, r, raw < 0 ? Rational(0) : raw);
}

StabilityReport stability_report(const BipartiteGraph& g, std::size_t r, const Rational& delta)
{
    if (r < 2)
        throw Error(ErrorKind::InvalidSpec, "stability report needs r >= 2");
    if (g.m() > g.n())
        throw Error(ErrorKind::PreconditionViolated, "stability report needs m <= n");
    if (g.edge_count() == 0)
        throw Error(ErrorKind::EmptyGraph, "graph has no edges");
    if (delta < 0)
        throw Error(ErrorKind::InvalidSpec, "delta must be non-negative");

    StabilityReport s;
    s.m = g.m();
    s.n = g.n();
    s.r = r;
    s.edges = g.edge_count();
    s.delta = delta;
    const Rational m = q(s.m), n = q(s.n), rr = q(r);
    s.alpha = (m + n) * delta / (rr * rr * n);
    s.beta = (m + n) * delta / (rr * rr * m);
    s.hypothesis_ok = q(s.edges) >= (1 - delta) * m * n / rr;

    const auto prof = degree_profile(g);
    Rational sum_x = 0, sum_y = 0;
    for (Vertex x = 0; x < g.m(); ++x) {
        const Rational gap = prof.avg_xy - q(g.degree_x(x));
        if (gap > 0 && at_least_cbrt(gap, s.alpha, n)) {
            s.exceptional_x.push_back(x);
            sum_x += q(g.degree_x(x));
        }
    }
    for (Vertex y = 0; y < g.n(); ++y) {
        const Rational gap = prof.avg_yx - q(g.degree_y(y));
        if (gap > 0 && at_least_cbrt(gap, s.beta, m)) {
            s.exceptional_y.push_back(y);
            sum_y += q(g.degree_y(y));
        }
    }
    s.k_x = s.exceptional_x.size();
    s.k_y = s.exceptional_y.size();
    s.defect_x = sum_x - q(s.k_x) * prof.avg_xy;
    s.defect_y = sum_y - q(s.k_y) * prof.avg_yx;

    s.double_star_order = uncolored_largest_double_star(g).order;
    s.case_i = s.double_star_order * r >= s.m + s.n;
    s.case_ii = at_most_cbrt(q(s.k_x), s.alpha, m) && at_most_cbrt(q(s.k_y), s.beta, n);
    return s;
}

MainComponentsReport main_lemma_report(const BipartiteGraph& g, std::size_t r)
{
    if (r < 2)
        throw Error(ErrorKind::InvalidSpec, "main lemma report needs r >= 2");
    if (g.edge_count() == 0)
        throw Error(ErrorKind::EmptyGraph, "graph has no edges");

    MainComponentsReport rep;
    rep.m = g.m();
    rep.n = g.n();
    rep.r = r;
    const Rational m = q(rep.m), n = q(rep.n), rr = q(r);
    const Rational raw = 1 - rr * q(g.edge_count()) / (m * n);
    rep.delta = raw < 0 ? Rational(0) : raw;
    rep.alpha = (m + n) * rep.delta / (rr * rr * n);
    rep.beta = (m + n) * rep.delta / (rr * rr * m);
    rep.degrees = degree_profile(g);
    rep.precondition_ok = rep.delta <= n / (64 * rr * rr * rr * rr * (m + n)) && rep.delta <= m / (64 * rr * (m + n));

    auto comps = components_of(g);
    rep.component_count = comps.size();
    std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.order() > b.order(); });
    rep.hypothesis_ok = comps.empty() || comps.front().order() * r < rep.m + rep.n;

    const std::size_t keep = std::min(r, comps.size());
    rep.components.assign(comps.begin(), comps.begin() + static_cast<std::ptrdiff_t>(keep));
    rep.has_r_components = keep == r;

    std::vector<bool> covered_x(rep.m, false), covered_y(rep.n, false);
    rep.a = rep.b = rep.c = true;
    for (const auto& comp : rep.components) {
        rep.a = rep.a && comp.order() * r < rep.m + rep.n;
        rep.b = rep.b && at_most_cbrt(rep.degrees.avg_yx - q(comp.xs.size()), rep.beta, m);
        rep.c = rep.c && at_most_cbrt(rep.degrees.avg_xy - q(comp.ys.size()), rep.alpha, n);
        for (Vertex x : comp.xs)
            covered_x[x] = true;
        for (Vertex y : comp.ys)
            covered_y[y] = true;
    }
    for (Vertex x = 0; x < rep.m; ++x)
        if (!covered_x[x])
            rep.z_x.push_back(x);
    for (Vertex y = 0; y < rep.n; ++y)
        if (!covered_y[y])
            rep.z_y.push_back(y);
    rep.d = at_most_cbrt(q(rep.z_x.size()), rep.alpha, m);
    rep.e = at_most_cbrt(q(rep.z_y.size()), rep.beta, n);
    return rep;
}

std::optional<BipartitionReduction> bipartition_avoiding_color(const GeneralGraph& g, Color avoided_color, std::size_t min_side)
{
    const std::size_t total = g.n();
    auto parts = color_partition(g, avoided_color);
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    std::vector<Vertex> side_a, side_b;
    bool found = false;
    for (const auto& part : parts) {
        if (part.size() >= min_side && total - part.size() >= min_side) {
            side_a = part;
            for (const auto& other : parts)
                if (&other != &part)
                    side_b.insert(side_b.end(), other.begin(), other.end());
            found = true;
            break;
        }
    }
    if (!found) {
        for (const auto& part : parts) {
            auto& lighter = side_b.size() < side_a.size() ? side_b : side_a;
            lighter.insert(lighter.end(), part.begin(), part.end());
        }
        if (side_a.size() < min_side || side_b.size() < min_side)
            return std::nullopt;
    }
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());

    BipartitionReduction red;
    red.avoided_color = avoided_color;
    red.side_a = side_a;
    red.side_b = side_b;
    const bool a_is_x = side_a.size() <= side_b.size();
    red.x_vertices = a_is_x ? side_a : side_b;
    red.y_vertices = a_is_x ? side_b : side_a;

    std::vector<std::size_t> index(total, SIZE_MAX);
    std::vector<bool> on_x(total, false);
    for (std::size_t i = 0; i < red.x_vertices.size(); ++i) {
        index[red.x_vertices[i]] = i;
        on_x[red.x_vertices[i]] = true;
    }
    for (std::size_t i = 0; i < red.y_vertices.size(); ++i)
        index[red.y_vertices[i]] = i;

    std::vector<ColoredEdge> crossing;
    for (const auto& e : g.edges()) {
        if (on_x[e.u] == on_x[e.v])
            continue;
        if (e.color == avoided_color)
            throw std::logic_error("bipartition has an avoided-color edge across it");
        const Vertex xv = on_x[e.u] ? e.u : e.v;
        const Vertex yv = on_x[e.u] ? e.v : e.u;
        const Color c = e.color < avoided_color ? e.color : e.color - 1;
        crossing.push_back({static_cast<Vertex>(index[xv]), static_cast<Vertex>(index[yv]), c});
    }
    const std::size_t colors = std::max<std::size_t>(g.r() - 1, 1);
    red.induced_coloring = EdgeColoring::from_colored_edges(red.x_vertices.size(), red.y_vertices.size(), colors, crossing);
    red.induced = red.induced_coloring.union_graph();
    return red;
}

CorollaryReport check_corollary(const GeneralGraph& g, CorollaryVariant variant)
{
    CorollaryReport rep;
    rep.variant = variant;
    rep.n = g.n();
    rep.r = g.r();
    rep.min_degree = g.min_degree();
    const Rational n = q(rep.n);
    std::size_t min_side = 0;

    if (variant == CorollaryVariant::PowerBound) {
        if (rep.r < 3)
            throw Error(ErrorKind::InvalidSpec, "corollary needs r >= 3");
        BigInt k = 3072;
        for (int i = 0; i < 5; ++i)
            k *= BigInt(rep.r - 1);
        rep.applicable = BigInt(rep.min_degree) * k >= (k - 1) * BigInt(rep.n);
        rep.target = n / q(rep.r - 1);
        rep.reduction_threshold = rep.target;
        min_side = static_cast<std::size_t>(ceil(n / 3));
    } else {
        if (rep.r != 3)
            throw Error(ErrorKind::InvalidSpec, "7/8 corollary needs exactly 3 colors");
        rep.applicable = 8 * rep.min_degree >= 7 * rep.n;
        rep.target = n / 2;
        rep.reduction_threshold = 3 * n / 4;
        min_side = rep.n / 4 + 1;
    }

    std::vector<std::size_t> largest_per_color(rep.r, 0);
    for (Color c = 0; c < rep.r; ++c) {
        for (auto& comp : general_components(g, c)) {
            largest_per_color[c] = std::max(largest_per_color[c], comp.order());
            if (!rep.witness || comp.order() > rep.witness->order())
                rep.witness = std::move(comp);
        }
    }
    rep.largest_order = rep.witness ? rep.witness->order() : 0;
    rep.holds = q(rep.largest_order) >= rep.target;
    rep.margin = q(rep.largest_order) - rep.target;

    for (Color c = 0; c < rep.r; ++c) {
        if (q(largest_per_color[c]) >= rep.reduction_threshold)
            continue;
        ReductionLink link;
        link.avoided_color = c;
        link.min_side = min_side;
        link.split = bipartition_avoiding_color(g, c, min_side);
        if (!link.split)
            continue;
        if (link.split->induced.edge_count() > 0) {
            if (variant == CorollaryVariant::PowerBound)
                link.bipartite = check_tetel_instance(link.split->induced, link.split->induced_coloring, rep.r - 1);
            else
                link.bipartite = check_additive_theorem(link.split->induced, link.split->induced_coloring);
        }
        rep.chain = std::move(link);
        break;
    }
    return rep;
}

}  // namespace mono
