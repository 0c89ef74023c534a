#include "mono/frontier.hpp"

#include "mono/constructions.hpp"

namespace mono {

HostFamily parse_family(std::string_view text)
{
    if (text == "circulant")
        return HostFamily::Circulant;
    if (text == "blocks")
        return HostFamily::Blocks;
    if (text == "all")
        return HostFamily::All;
    throw Error(ErrorKind::InvalidSpec, "unknown host family '" + std::string(text) + "'");
}

std::string_view name(HostFamily family) noexcept
{
    switch (family) {
    case HostFamily::Circulant: return "circulant";
    case HostFamily::Blocks: return "blocks";
    case HostFamily::All: return "all";
    }
    return "unknown";
}

namespace {
    BipartiteGraph minus_block(std::size_t m, std::size_t n, std::size_t s)
    {
        BipartiteGraph::Builder b(m, n);
        for (Vertex x = 0; x < m; ++x)
            for (Vertex y = 0; y < n; ++y)
                if (x >= s || y >= s)
                    b.add(x, y);
        return std::move(b).build();
    }

    bool meets_additive_alpha(const BipartiteGraph& g, const Rational& alpha, std::size_t total)
    {
        const auto p = degree_profile(g);
        const Rational slack = alpha * Rational(static_cast<std::int64_t>(total));
        const auto side = [](std::size_t v) { return Rational(static_cast<std::int64_t>(v)); };
        return side(p.delta_xy) >= side(g.n()) - slack && side(p.delta_yx) >= side(g.m()) - slack;
    }
}

std::vector<FrontierRow> alpha_frontier(std::size_t total_n, const std::vector<Rational>& alpha_grid, HostFamily family,
                                        std::size_t r, const FrontierConfig& cfg)
{
    std::vector<FrontierRow> rows;
    const Rational total = Rational(static_cast<std::int64_t>(total_n));
    const auto goal = ComponentGoal::order_at_least(total / 2);
    for (const Rational& alpha : alpha_grid) {
        if (alpha <= 0 || alpha > Rational(1, 2))
            throw Error(ErrorKind::InvalidSpec, "alpha must lie in (0, 1/2], got " + to_string(alpha));
        FrontierRow row;
        row.alpha = alpha;
        const std::size_t slack = static_cast<std::size_t>(floor(alpha * total));
        for (std::size_t m = 1; 2 * m <= total_n; ++m) {
            if (Rational(static_cast<std::int64_t>(m)) <= 2 * alpha * total)
                continue;
            const std::size_t n = total_n - m;
            std::vector<std::pair<std::string, BipartiteGraph>> hosts;
            if (family != HostFamily::Blocks)
                hosts.emplace_back("circulant", complete_minus_circulant(m, n, std::min(slack, n)));
            if (family != HostFamily::Circulant && slack >= 1)
                hosts.emplace_back("blocks", minus_block(m, n, std::min(slack, m)));
            for (auto& [fam, host] : hosts) {
                if (host.edge_count() == 0 || !meets_additive_alpha(host, alpha, total_n))
                    continue;
                FrontierHost fh;
                fh.family = fam;
                fh.m = m;
                fh.n = n;
                fh.removed = fam == "circulant" ? std::min(slack, n) : std::min(slack, m);
                fh.edges = host.edge_count();
                fh.exhaustive = fh.edges <= cfg.exhaustive_edge_limit;
                if (fh.exhaustive) {
                    SearchConfig sc = cfg.search;
                    sc.mode = SearchMode::Exhaustive;
                    auto res = find_avoiding_coloring(host, r, goal, sc);
                    fh.outcome.examined = res.examined;
                    if (res.budget_hit) {
                        fh.outcome.kind = OutcomeKind::BudgetExhausted;
                    } else if (res.found) {
                        fh.outcome.kind = OutcomeKind::Counterexample;
                        fh.outcome.witness = EdgeColoring::from_host_order(host, r, res.colors);
                        fh.outcome.value = max_component_order(host, r, res.colors);
                    } else {
                        fh.outcome.kind = OutcomeKind::AllSatisfy;
                    }
                } else {
                    SearchConfig sc = cfg.search;
                    sc.mode = SearchMode::Random;
                    fh.outcome = random_search(host, r, goal, sc);
                }
                fh.outcome.elapsed = {};
                row.hosts.push_back(std::move(fh));
            }
        }
        if (row.hosts.empty())
            row.verdict = "no-hosts";
        else {
            row.verdict = "no-counterexample-found";
            for (const auto& h : row.hosts)
                if (h.outcome.kind == OutcomeKind::Counterexample)
                    row.verdict = "counterexample";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace mono
