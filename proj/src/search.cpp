#include "mono/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include <omp.h>

#include "mono/analysis.hpp"

namespace mono {

std::string_view name(OutcomeKind kind) noexcept
{
    switch (kind) {
    case OutcomeKind::AllSatisfy: return "AllSatisfy";
    case OutcomeKind::Counterexample: return "Counterexample";
    case OutcomeKind::BudgetExhausted: return "BudgetExhausted";
    case OutcomeKind::MinMaxValue: return "MinMaxValue";
    }
    return "Unknown";
}

std::string_view name(Checker checker) noexcept
{
    switch (checker) {
    case Checker::Complete: return "complete";
    case Checker::R2: return "r2";
    case Checker::Conjecture: return "conjecture";
    case Checker::Power: return "power";
    case Checker::Additive: return "additive";
    }
    return "unknown";
}

Checker parse_checker(std::string_view text)
{
    for (Checker c : {Checker::Complete, Checker::R2, Checker::Conjecture, Checker::Power, Checker::Additive})
        if (name(c) == text)
            return c;
    throw Error(ErrorKind::InvalidSpec, "unknown checker '" + std::string(text) + "'");
}

ComponentGoal ComponentGoal::order_at_least(const Rational& target)
{
    if (target <= 0)
        throw Error(ErrorKind::InvalidSpec, "component target must be positive");
    ComponentGoal g;
    g.order_num = static_cast<std::int64_t>(boost::multiprecision::numerator(target));
    g.order_den = static_cast<std::int64_t>(boost::multiprecision::denominator(target));
    return g;
}

ComponentGoal ComponentGoal::balanced(std::size_t m, std::size_t n)
{
    ComponentGoal g;
    g.twice_x = static_cast<std::uint32_t>(m);
    g.twice_y = static_cast<std::uint32_t>(n);
    return g;
}

bool checker_precondition(Checker checker, const BipartiteGraph& host, std::size_t r)
{
    switch (checker) {
    case Checker::Complete: return host.m() >= 1 && host.n() >= 1 && host.edge_count() == host.m() * host.n();
    case Checker::R2: return r == 2 && two_color_degrees_hold(host);
    case Checker::Conjecture: return r >= 2 && meets_conjecture_degrees(host, r);
    case Checker::Power: return r >= 2 && tetel_degrees_hold(host, r);
    case Checker::Additive: return r == 2 && additive_degrees_hold(host);
    }
    return false;
}

ComponentGoal checker_goal(Checker checker, const BipartiteGraph& host, std::size_t r, const std::optional<Rational>& cfg_target)
{
    if (checker == Checker::Additive)
        return ComponentGoal::balanced(host.m(), host.n());
    if (cfg_target)
        return ComponentGoal::order_at_least(*cfg_target);
    return ComponentGoal::order_at_least(
        Rational(static_cast<std::int64_t>(host.m() + host.n()), static_cast<std::int64_t>(r)));
}

SplitMix64 SplitMix64::for_sample(std::uint64_t seed, std::uint64_t index)
{
    SplitMix64 mix(seed ^ (index * 0xD1B54A32D192ED03ULL));
    return SplitMix64(mix.next() ^ index);
}

namespace {

    using Clock = std::chrono::steady_clock;

    /// Depth-first enumeration over edge colors in host edge order, one
    /// rollback union-find per color. A branch dies as soon as the edge
    /// just colored completes a component meeting the goal.
    class Enumerator {
    public:
        Enumerator(const std::vector<Edge>& edges, std::uint32_t m, std::uint32_t n, std::size_t r,
                   const ComponentGoal& goal, bool canonical)
            : edges_(edges), r_(r), goal_(goal), canonical_(canonical), uf_(r, RollbackUnionFind(m, n)), colors_(edges.size(), 0)
        {
        }

        enum class Status { Exhausted, Found, BudgetHit };

        struct Task {
            std::vector<Color> prefix;
            std::size_t used = 0;          // colors appearing in the prefix
            std::uint64_t nodes_before = 0;  // prefix-phase nodes since the previous task
        };

        /// Lists every surviving prefix of length depth in lexicographic order.
        /// Returns the prefix-phase nodes visited after the last task.
        std::uint64_t split(std::size_t depth, std::vector<Task>& tasks)
        {
            std::uint64_t pending = 0;
            split_rec(0, 0, depth, tasks, pending);
            return pending;
        }

        /// Replays a task prefix, then searches below it with a node cap.
        Status run(const Task& task, std::uint64_t cap)
        {
            nodes_ = 0;
            cap_ = cap;
            for (std::size_t i = 0; i < task.prefix.size(); ++i) {
                uf_[task.prefix[i]].join_edge(edges_[i].x, edges_[i].y);
                colors_[i] = task.prefix[i];
            }
            const Status s = dfs(task.prefix.size(), task.used);
            for (std::size_t i = task.prefix.size(); i-- > 0;)
                uf_[task.prefix[i]].undo();
            return s;
        }

        std::uint64_t nodes() const noexcept { return nodes_; }
        const std::vector<Color>& colors() const noexcept { return colors_; }

    private:
        std::size_t limit(std::size_t used) const noexcept { return canonical_ ? std::min(r_, used + 1) : r_; }

        void split_rec(std::size_t i, std::size_t used, std::size_t depth, std::vector<Task>& tasks, std::uint64_t& pending)
        {
            if (i == depth) {
                tasks.push_back({std::vector<Color>(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(i)), used, pending});
                pending = 0;
                return;
            }
            for (Color c = 0; c < limit(used); ++c) {
                ++pending;
                auto& uf = uf_[c];
                const auto root = uf.join_edge(edges_[i].x, edges_[i].y);
                if (!goal_.met(uf.counts(root))) {
                    colors_[i] = c;
                    split_rec(i + 1, std::max<std::size_t>(used, c + 1), depth, tasks, pending);
                }
                uf.undo();
            }
        }

        Status dfs(std::size_t i, std::size_t used)
        {
            if (i == edges_.size())
                return Status::Found;
            for (Color c = 0; c < limit(used); ++c) {
                if (++nodes_ > cap_)
                    return Status::BudgetHit;
                auto& uf = uf_[c];
                const auto root = uf.join_edge(edges_[i].x, edges_[i].y);
                Status s = Status::Exhausted;
                if (!goal_.met(uf.counts(root))) {
                    colors_[i] = c;
                    s = dfs(i + 1, std::max<std::size_t>(used, c + 1));
                }
                uf.undo();
                if (s != Status::Exhausted)
                    return s;
            }
            return Status::Exhausted;
        }

        const std::vector<Edge>& edges_;
        std::size_t r_;
        ComponentGoal goal_;
        bool canonical_;
        std::vector<RollbackUnionFind> uf_;
        std::vector<Color> colors_;
        std::uint64_t nodes_ = 0;
        std::uint64_t cap_ = 0;
    };

    struct TaskResult {
        Enumerator::Status status = Enumerator::Status::Exhausted;
        std::uint64_t nodes = 0;
        std::vector<Color> colors;
        bool ran = false;
    };

    void check_host(const BipartiteGraph& host, std::size_t r)
    {
        if (r < 1)
            throw Error(ErrorKind::InvalidSpec, "need at least one color");
        if (host.edge_count() == 0)
            throw Error(ErrorKind::EmptyGraph, "host has no edges");
    }

    int worker_count(const SearchConfig& cfg) { return static_cast<int>(std::max<std::size_t>(cfg.workers, 1)); }

    /// Recomputes components from scratch; throws if a reported witness does
    /// not avoid the goal.
    void confirm_avoiding(const BipartiteGraph& host, const EdgeColoring& col, const ComponentGoal& goal)
    {
        for (const auto& comp : mono_components(host, col))
            if (goal.met(comp))
                throw std::logic_error("search witness has a component meeting the goal");
    }

}  // namespace

AvoidResult find_avoiding_coloring(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal, const SearchConfig& cfg)
{
    check_host(host, r);
    if (cfg.budget == 0)
        throw Error(ErrorKind::InvalidSpec, "budget must be >= 1");
    const auto edges = host.edges();
    const auto m = static_cast<std::uint32_t>(host.m());
    const auto n = static_cast<std::uint32_t>(host.n());
    const std::size_t depth = std::min(cfg.split_depth, edges.size());

    std::vector<Enumerator::Task> tasks;
    const std::uint64_t trailing = Enumerator(edges, m, n, r, goal, cfg.canonicalize_colors).split(depth, tasks);

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> stop_after{tasks.size()};

#pragma omp parallel num_threads(worker_count(cfg))
    {
        Enumerator local(edges, m, n, r, goal, cfg.canonicalize_colors);
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (i > stop_after.load(std::memory_order_relaxed))
                continue;
            auto& res = results[i];
            res.status = local.run(tasks[i], cfg.budget);
            res.nodes = local.nodes();
            res.ran = true;
            if (res.status == Enumerator::Status::Found)
                res.colors = local.colors();
            if (res.status != Enumerator::Status::Exhausted) {
                std::size_t cur = stop_after.load();
                while (i < cur && !stop_after.compare_exchange_weak(cur, i)) {
                }
            }
        }
    }

    // Fold in task order: counts match a single sequential depth-first walk.
    AvoidResult out;
    std::uint64_t examined = 0;
    auto over = [&](std::uint64_t add) {
        examined = add > cfg.budget - std::min(examined, cfg.budget) ? cfg.budget + 1 : examined + add;
        return examined > cfg.budget;
    };
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!results[i].ran)
            throw std::logic_error("search task skipped before the decisive task");
        if (over(tasks[i].nodes_before) || over(results[i].nodes) || results[i].status == Enumerator::Status::BudgetHit) {
            out.budget_hit = true;
            out.examined = cfg.budget;
            return out;
        }
        if (results[i].status == Enumerator::Status::Found) {
            out.found = true;
            out.colors = std::move(results[i].colors);
            out.examined = examined;
            return out;
        }
    }
    if (over(trailing)) {
        out.budget_hit = true;
        out.examined = cfg.budget;
        return out;
    }
    out.examined = examined;
    return out;
}

std::size_t max_component_order(const BipartiteGraph& host, std::size_t r, std::span<const Color> colors)
{
    const auto edges = host.edges();
    std::vector<RollbackUnionFind> uf(r, RollbackUnionFind(static_cast<std::uint32_t>(host.m()), static_cast<std::uint32_t>(host.n())));
    std::size_t best = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto root = uf[colors[i]].join_edge(edges[i].x, edges[i].y);
        best = std::max<std::size_t>(best, uf[colors[i]].counts(root).order());
    }
    return best;
}

SearchOutcome exists_coloring_below(const BipartiteGraph& host, std::size_t r, const Rational& target, const SearchConfig& cfg)
{
    const auto start = Clock::now();
    if (target < 2)
        throw Error(ErrorKind::InvalidSpec, "target must be >= 2");
    const auto goal = ComponentGoal::order_at_least(target);
    auto res = find_avoiding_coloring(host, r, goal, cfg);
    SearchOutcome out;
    out.examined = res.examined;
    if (res.budget_hit) {
        out.kind = OutcomeKind::BudgetExhausted;
    } else if (res.found) {
        out.kind = OutcomeKind::Counterexample;
        out.witness = EdgeColoring::from_host_order(host, r, res.colors);
        out.value = max_component_order(host, r, res.colors);
        confirm_avoiding(host, *out.witness, goal);
    } else {
        out.kind = OutcomeKind::AllSatisfy;
    }
    out.elapsed = Clock::now() - start;
    return out;
}

SearchOutcome min_max_mono_component(const BipartiteGraph& host, std::size_t r, const SearchConfig& cfg)
{
    const auto start = Clock::now();
    check_host(host, r);

    // Density bound: some class has >= e/r edges, hence a double star on
    // >= e(m+n)/(r m n) vertices.
    const Rational density = Rational(static_cast<std::int64_t>(host.edge_count() * (host.m() + host.n())),
                                      static_cast<std::int64_t>(r * host.m() * host.n()));
    const std::size_t lower = std::max<std::size_t>(2, static_cast<std::size_t>(ceil(density)));

    SearchOutcome out;
    SearchConfig step = cfg;
    std::size_t threshold = host.m() + host.n() + 1;
    std::vector<Color> best;
    std::size_t best_value = 0;
    auto exhausted = [&] {
        out.kind = OutcomeKind::BudgetExhausted;
        out.examined = cfg.budget;
        out.lower_bound = lower;
        if (!best.empty()) {
            out.value = best_value;
            out.witness = EdgeColoring::from_host_order(host, r, best);
        }
    };
    while (true) {
        if (out.examined >= cfg.budget) {
            exhausted();
            break;
        }
        step.budget = cfg.budget - out.examined;
        auto res = find_avoiding_coloring(host, r, ComponentGoal::order_at_least(Rational(static_cast<std::int64_t>(threshold))), step);
        out.examined += res.examined;
        if (res.budget_hit) {
            exhausted();
            break;
        }
        if (!res.found) {
            out.kind = OutcomeKind::MinMaxValue;
            out.value = best_value;
            out.lower_bound = best_value;
            out.witness = EdgeColoring::from_host_order(host, r, best);
            break;
        }
        // The lexicographically least coloring below the previous threshold;
        // once nothing lies below its value it is the least optimal coloring.
        best = std::move(res.colors);
        best_value = max_component_order(host, r, best);
        threshold = best_value;
    }
    out.elapsed = Clock::now() - start;
    return out;
}

SearchOutcome exhaustive_verify(const BipartiteGraph& host, std::size_t r, Checker checker, const SearchConfig& cfg)
{
    const auto start = Clock::now();
    check_host(host, r);
    if (!checker_precondition(checker, host, r))
        throw Error(ErrorKind::PreconditionViolated,
            std::string("host does not meet the ") + std::string(name(checker)) + " degree condition for r = " + std::to_string(r));
    const auto goal = checker_goal(checker, host, r, cfg.target);
    auto res = find_avoiding_coloring(host, r, goal, cfg);
    SearchOutcome out;
    out.examined = res.examined;
    if (res.budget_hit) {
        out.kind = OutcomeKind::BudgetExhausted;
    } else if (res.found) {
        out.kind = OutcomeKind::Counterexample;
        out.witness = EdgeColoring::from_host_order(host, r, res.colors);
        out.value = max_component_order(host, r, res.colors);
        confirm_avoiding(host, *out.witness, goal);
    } else {
        out.kind = OutcomeKind::AllSatisfy;
    }
    out.elapsed = Clock::now() - start;
    return out;
}

SearchOutcome random_search(const BipartiteGraph& host, std::size_t r, Checker checker, const SearchConfig& cfg)
{
    check_host(host, r);
    if (!checker_precondition(checker, host, r))
        throw Error(ErrorKind::PreconditionViolated,
            std::string("host does not meet the ") + std::string(name(checker)) + " degree condition for r = " + std::to_string(r));
    return random_search(host, r, checker_goal(checker, host, r, cfg.target), cfg);
}

SearchOutcome random_search(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal, const SearchConfig& cfg)
{
    const auto start = Clock::now();
    check_host(host, r);
    if (cfg.budget == 0)
        throw Error(ErrorKind::InvalidSpec, "budget must be >= 1");
    const auto edges = host.edges();
    const auto m = static_cast<std::uint32_t>(host.m());
    const auto n = static_cast<std::uint32_t>(host.n());
    const auto rr = static_cast<std::uint32_t>(r);
    std::atomic<std::uint64_t> first{cfg.budget};

#pragma omp parallel num_threads(worker_count(cfg))
    {
        std::vector<RollbackUnionFind> uf(r, RollbackUnionFind(m, n));
        std::vector<Color> colors(edges.size());
#pragma omp for schedule(dynamic, 256)
        for (std::uint64_t s = 0; s < cfg.budget; ++s) {
            if (s > first.load(std::memory_order_relaxed))
                continue;
            auto rng = SplitMix64::for_sample(cfg.seed, s);
            for (auto& c : colors)
                c = rng.below(rr);
            bool met = false;
            std::size_t joined = 0;
            for (std::size_t i = 0; i < edges.size() && !met; ++i, ++joined) {
                auto& u = uf[colors[i]];
                met = goal.met(u.counts(u.join_edge(edges[i].x, edges[i].y)));
            }
            for (std::size_t i = joined; i-- > 0;)
                uf[colors[i]].undo();
            if (!met) {
                std::uint64_t cur = first.load();
                while (s < cur && !first.compare_exchange_weak(cur, s)) {
                }
            }
        }
    }

    SearchOutcome out;
    out.exhaustive = false;
    const std::uint64_t hit = first.load();
    if (hit < cfg.budget) {
        auto rng = SplitMix64::for_sample(cfg.seed, hit);
        std::vector<Color> colors(edges.size());
        for (auto& c : colors)
            c = rng.below(rr);
        out.kind = OutcomeKind::Counterexample;
        out.witness = EdgeColoring::from_host_order(host, r, colors);
        out.value = max_component_order(host, r, colors);
        out.examined = hit + 1;
        confirm_avoiding(host, *out.witness, goal);
    } else {
        out.kind = OutcomeKind::AllSatisfy;
        out.examined = cfg.budget;
    }
    out.elapsed = Clock::now() - start;
    return out;
}

}  // namespace mono
