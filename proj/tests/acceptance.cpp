// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mono/analysis.hpp"
#include "mono/cli.hpp"
#include "mono/constructions.hpp"
#include "mono/general_graph.hpp"
#include "mono/search.hpp"
#include "oracle.hpp"

using namespace mono;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    std::printf("%s %2d  %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string secs(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

SearchConfig single_worker()
{
    SearchConfig cfg;
    cfg.workers = 1;
    cfg.split_depth = 6;
    return cfg;
}

BipartiteGraph k44_minus_pm()
{
    BipartiteGraph::Builder b(4, 4);
    for (Vertex x = 0; x < 4; ++x)
        for (Vertex y = 0; y < 4; ++y)
            if (x != y)
                b.add(x, y);
    return std::move(b).build();
}

// Every monochromatic component is a K_{2,2} block.
bool is_block_witness(const BipartiteGraph& host, const EdgeColoring& col)
{
    for (const auto& c : mono_components(host, col)) {
        if (c.xs.size() != 2 || c.ys.size() != 2)
            return false;
        for (auto x : c.xs)
            for (auto y : c.ys)
                if (col.color_of(x, y) != c.color)
                    return false;
    }
    return true;
}

void criterion_1()
{
    const auto t = std::chrono::steady_clock::now();
    const auto host = BipartiteGraph::complete(4, 4);
    const auto verify = exhaustive_verify(host, 2, Checker::Complete, single_worker());
    const auto mm = min_max_mono_component(host, 2, single_worker());
    const double s = seconds_since(t);
    const bool block = mm.witness && is_block_witness(host, *mm.witness);
    const bool ok = verify.kind == OutcomeKind::AllSatisfy && mm.kind == OutcomeKind::MinMaxValue && mm.value == 4u &&
                    block && verify.examined <= (1u << 16) && s < 5.0;
    report(1, ok,
           "K44 r=2: every coloring has a component >= 4 (" + std::to_string(verify.examined) + " nodes); min-max " +
               (mm.value ? std::to_string(*mm.value) : "?") + (block ? ", 2x2-block witness" : ", witness not 2x2 blocks") + ", " +
               secs(s));
}

void criterion_2()
{
    const auto t = std::chrono::steady_clock::now();
    const auto host = k44_minus_pm();
    const auto p = degree_profile(host);
    const bool pre = two_color_degrees_hold(host) && p.delta_xy == 3 && p.delta_yx == 3;
    const auto out = exhaustive_verify(host, 2, Checker::R2, single_worker());
    const double s = seconds_since(t);
    const bool ok = pre && out.kind == OutcomeKind::AllSatisfy && out.examined <= (1u << 12) && s < 1.0;
    report(2, ok,
           "K44 minus perfect matching r=2: " + std::string(name(out.kind)) + " over " + std::to_string(out.examined) +
               " nodes, " + secs(s));
}

void criterion_3()
{
    const auto g = lower_bound_construction(2, 1, 1);
    const auto p = degree_profile(g.host);
    const auto largest = largest_mono_component(g.host, g.coloring).order();
    const bool ok = Rational(static_cast<long>(p.delta_xy)) == Rational(2, 3) * 3 &&
                    Rational(static_cast<long>(p.delta_yx)) == Rational(2, 3) * 3 && !meets_conjecture_degrees(g.host, 2) &&
                    largest == 2 && Rational(static_cast<long>(largest)) == Rational(static_cast<long>(g.host.m() + g.host.n()), 3);
    report(3, ok, "lower_bound(2,1,1): delta " + std::to_string(p.delta_xy) + "/" + std::to_string(p.delta_yx) +
                      ", largest component " + std::to_string(largest) + " = (m+n)/3");
}

void criterion_4()
{
    const auto g = double_star_gap_construction(2, 2, 3);
    const auto p = degree_profile(g.host);
    const auto largest = largest_mono_component(g.host, g.coloring).order();
    const auto ds = largest_double_star(g.host, g.coloring).order;
    const bool ok = p.delta_xy == g.host.n() - 2 && p.delta_xy == 4 && 2 * largest == g.host.m() + g.host.n() && largest == 5 &&
                    ds == 4 && ds == 2 - 1 + 3;
    report(4, ok, "double_star_gap(2,2,3): delta(X,Y) " + std::to_string(p.delta_xy) + ", component " + std::to_string(largest) +
                      ", double star " + std::to_string(ds));
}

void criterion_5()
{
    std::size_t violations = 0, oracle_mismatch = 0, checked = 0;
    auto check = [&](std::size_t m, std::size_t n, const std::vector<Edge>& es) {
        const auto g = BipartiteGraph::from_edge_list(m, n, es);
        const auto ds = es.empty() ? 0 : uncolored_largest_double_star(g).order;
        std::vector<std::pair<unsigned, unsigned>> plain;
        for (auto e : es)
            plain.push_back({e.x, e.y});
        if (ds != oracle::double_star(m, n, plain))
            ++oracle_mismatch;
        if (ds * m * n < es.size() * (m + n))
            ++violations;
        ++checked;
    };
    for (unsigned mask = 0; mask < 512; ++mask) {
        std::vector<Edge> es;
        for (unsigned i = 0; i < 9; ++i)
            if (mask >> i & 1)
                es.push_back({i / 3, i % 3});
        check(3, 3, es);
    }
    std::mt19937_64 rng(20240501);
    for (int i = 0; i < 10000; ++i) {
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> es;
        for (Vertex x = 0; x < 8; ++x)
            for (Vertex y = 0; y < 8; ++y)
                if (coin(rng))
                    es.push_back({x, y});
        check(8, 8, es);
    }
    report(5, violations == 0 && oracle_mismatch == 0,
           "double star density bound on " + std::to_string(checked) + " graphs: " + std::to_string(violations) +
               " violations, " + std::to_string(oracle_mismatch) + " oracle mismatches");
}

void criterion_6()
{
    const auto t = std::chrono::steady_clock::now();
    const auto host = BipartiteGraph::complete(3, 3);
    const auto verify = exhaustive_verify(host, 3, Checker::Complete, single_worker());
    const auto mm = min_max_mono_component(host, 3, single_worker());
    const double s = seconds_since(t);
    const auto cyc = cyclic_one_factorization(3);
    // same coloring as the cyclic factorization up to renaming colors
    bool cyclic = mm.witness.has_value();
    if (cyclic) {
        std::vector<int> map(3, -1);
        for (const auto& e : cyc.coloring.colored_edges()) {
            const auto w = *mm.witness->color_of(e.x, e.y);
            if (map[e.color] == -1)
                map[e.color] = static_cast<int>(w);
            cyclic = cyclic && map[e.color] == static_cast<int>(w);
        }
        std::sort(map.begin(), map.end());
        cyclic = cyclic && map == std::vector<int>{0, 1, 2};
    }
    const bool ok = verify.kind == OutcomeKind::AllSatisfy && mm.value == 2u && cyclic && s < 1.0;
    report(6, ok,
           "K33 r=3: every coloring has a component >= 2; min-max " + (mm.value ? std::to_string(*mm.value) : "?") +
               (cyclic ? " with the cyclic factorization witness, " : " without the cyclic witness, ") + secs(s));
}

void criterion_7()
{
    const auto t = std::chrono::steady_clock::now();
    const auto host = complete_minus_circulant(8, 8, 2);
    const auto p = degree_profile(host);
    const bool pre = additive_degrees_hold(host) && Rational(static_cast<long>(p.delta_xy)) == Rational(8) - Rational(16, 8) &&
                     p.delta_yx == 6 && host.m() == 8;
    SearchConfig cfg;
    cfg.seed = 42;
    cfg.budget = 100000;
    cfg.workers = 4;
    const auto out = random_search(host, 2, Checker::Additive, cfg);
    const double s = seconds_since(t);
    const bool ok = pre && out.kind == OutcomeKind::AllSatisfy && out.examined == 100000 && s < 60.0;
    report(7, ok, "complete_minus_circulant(8,8,2), 100000 random 2-colorings: " + std::string(name(out.kind)) + ", " + secs(s));
}

void criterion_8()
{
    std::size_t checked = 0, violations = 0;
    for (unsigned mask = 1; mask < 512; ++mask) {
        BipartiteGraph::Builder b(3, 3);
        std::size_t e = 0;
        for (unsigned i = 0; i < 9; ++i)
            if (mask >> i & 1) {
                b.add(i / 3, i % 3);
                ++e;
            }
        const auto g = std::move(b).build();
        for (int k = 0; k <= 9; ++k) {
            const Rational delta(k, 18);
            if (Rational(static_cast<long>(e)) < (1 - delta) * Rational(9, 2))
                continue;
            const auto rep = stability_report(g, 2, delta);
            ++checked;
            if (!rep.hypothesis_ok || !rep.dichotomy())
                ++violations;
        }
    }
    report(8, checked > 0 && violations == 0,
           "stability dichotomy on " + std::to_string(checked) + " (subgraph of K33, delta) pairs: " + std::to_string(violations) +
               " violations");
}

void criterion_9()
{
    const auto t = std::chrono::steady_clock::now();
    // delta = (4k+1)/(2k+1)^2 for m = n = 2k+1; threshold min{n/(64 r^4 (m+n)), m/(64 r (m+n))} with r = 2
    auto fits = [](long k) {
        const Rational n(2 * k + 1);
        const Rational delta(4 * k + 1, (2 * k + 1) * (2 * k + 1));
        const Rational bound = std::min(n / (64 * 16 * 2 * n), n / (64 * 2 * 2 * n));
        return delta <= bound;
    };
    long k = 1;
    while (!fits(k))
        ++k;
    const std::size_t side = static_cast<std::size_t>(2 * k + 1);
    BipartiteGraph::Builder b(side, side);
    for (Vertex block = 0; block < 2; ++block)
        for (Vertex x = 0; x < k; ++x)
            for (Vertex y = 0; y < k; ++y)
                b.add(block * k + x, block * k + y);
    const auto g = std::move(b).build();
    const auto rep = main_lemma_report(g, 2);
    const double s = seconds_since(t);
    const bool ok = !fits(k - 1) && rep.precondition_ok && rep.hypothesis_ok && rep.all_flags() && s < 30.0;
    report(9, ok,
           "two-block instance, minimal k = " + std::to_string(k) + " (" + std::to_string(g.edge_count()) +
               " edges): precondition " + (rep.precondition_ok ? "ok" : "no") + ", hypothesis " +
               (rep.hypothesis_ok ? "ok" : "no") + ", flags a-e " + (rep.all_flags() ? "all true" : "not all true") + ", " +
               secs(s));
}

void criterion_10()
{
    std::mt19937_64 rng(1234);
    std::size_t trials = 0, returned = 0, infeasible = 0, failures10 = 0, crossing = 0, worst_n = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + rng() % 64;
        const std::size_t cap = (n + 3) / 4;
        const std::size_t min_side = cap + 1;
        // random multiset of component sizes, each <= ceil(n/4), summing to n
        std::vector<std::size_t> sizes;
        std::size_t left = n;
        while (left > 0) {
            const std::size_t s = 1 + rng() % std::min(cap, left);
            sizes.push_back(s);
            left -= s;
        }
        // realize it: each part a clique in color 0, everything else color 1
        std::vector<std::size_t> part(n);
        std::vector<Vertex> perm(n);
        for (std::size_t v = 0; v < n; ++v)
            perm[v] = static_cast<Vertex>(v);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::size_t pos = 0;
        for (std::size_t p = 0; p < sizes.size(); ++p)
            for (std::size_t j = 0; j < sizes[p]; ++j)
                part[perm[pos++]] = p;
        std::vector<GeneralEdge> es;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                es.push_back({u, v, part[u] == part[v] ? 0u : 1u});
        const auto g = GeneralGraph::from_edges(n, 2, es);
        ++trials;
        const bool exists = oracle::split_exists(sizes, min_side);
        std::optional<BipartitionReduction> red;
        try {
            red = bipartition_avoiding_color(g, 0, min_side);
        } catch (const std::logic_error&) {
            ++crossing;
            continue;
        }
        if (!red) {
            if (exists)
                ++failures10;
            else {
                ++infeasible;
                worst_n = std::max(worst_n, n);
            }
            continue;
        }
        ++returned;
        std::vector<char> on_a(n, 0);
        for (auto v : red->side_a)
            on_a[v] = 1;
        bool clean = red->side_a.size() >= min_side && red->side_b.size() >= min_side && red->side_a.size() + red->side_b.size() == n;
        for (const auto& e : g.edges())
            if (e.color == 0 && on_a[e.u] != on_a[e.v])
                clean = false;
        if (!clean)
            ++crossing;
    }
    report(10, failures10 == 0 && crossing == 0,
           std::to_string(trials) + " multisets: " + std::to_string(returned) + " crossing-free splits, " +
               std::to_string(failures10) + " missed feasible splits, " + std::to_string(crossing) + " bad splits, " +
               std::to_string(infeasible) + " with no valid split at all (all n <= " + std::to_string(worst_n) + ")");
}

void criterion_11()
{
    const std::vector<std::vector<std::string>> commands{
        {"search", "--host", "complete:m=4,n=4", "--r", "2", "--mode", "minmax"},
        {"search", "--host", "complete:m=3,n=3", "--r", "3", "--mode", "minmax", "--split-depth", "3"},
        {"search", "--host", "complete:m=3,n=4", "--r", "2", "--mode", "below", "--target", "5"},
        {"search", "--host", "complete:m=4,n=4", "--r", "2", "--mode", "verify", "--check", "r2"},
        {"search", "--host", "complete:m=3,n=5", "--r", "2", "--mode", "random", "--target", "7", "--seed", "42", "--budget",
         "20000"},
        {"search", "--host", "circulant:m=8,n=8,d=2", "--r", "2", "--mode", "random", "--check", "additive", "--seed", "7",
         "--budget", "20000"},
        {"search", "--mode", "frontier", "--n", "12", "--alphas", "1/12,1/8,1/2", "--seed", "5", "--budget", "3000"},
        {"search", "--host", "complete:m=4,n=4", "--r", "2", "--mode", "minmax", "--budget", "50"},
    };
    std::size_t identical = 0;
    for (const auto& cmd : commands) {
        std::vector<std::string> outputs;
        for (const char* workers : {"1", "4"})
            for (int rep = 0; rep < 2; ++rep) {
                auto args = cmd;
                args.insert(args.begin(), "--no-manifest");
                args.push_back("--workers");
                args.push_back(workers);
                std::ostringstream out, err;
                cli::run(args, out, err);
                outputs.push_back(out.str());
            }
        if (!outputs[0].empty() && std::all_of(outputs.begin(), outputs.end(), [&](const auto& o) { return o == outputs[0]; }))
            ++identical;
    }
    report(11, identical == commands.size(),
           std::to_string(identical) + "/" + std::to_string(commands.size()) +
               " search commands byte-identical across 2 runs x workers {1,4}");
}

}  // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    return failures;
}
