#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "mono/bigraph.hpp"
#include "mono/rational.hpp"
#include "mono/union_find.hpp"

namespace mono {

/// Monotone property of a single component: once a component meets it,
/// every component grown from it does too. Met iff
///   order * order_den >= order_num, 2 |C cap X| >= twice_x and 2 |C cap Y| >= twice_y.
struct ComponentGoal {
    std::int64_t order_num = 0;
    std::int64_t order_den = 1;
    std::uint32_t twice_x = 0;
    std::uint32_t twice_y = 0;

    /// order >= target (target > 0).
    static ComponentGoal order_at_least(const Rational& target);
    /// |C cap X| >= m/2 and |C cap Y| >= n/2.
    static ComponentGoal balanced(std::size_t m, std::size_t n);

    bool met(std::uint32_t xs, std::uint32_t ys) const noexcept
    {
        return static_cast<std::int64_t>(xs + ys) * order_den >= order_num && 2 * xs >= twice_x && 2 * ys >= twice_y;
    }
    bool met(const RollbackUnionFind::Counts& c) const noexcept { return met(c.xs, c.ys); }
    bool met(const Component& c) const noexcept
    {
        return met(static_cast<std::uint32_t>(c.xs.size()), static_cast<std::uint32_t>(c.ys.size()));
    }
};

enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;
    /// Enumerate one coloring per color permutation class (colors first
    /// appear in increasing order along the edge sequence).
    bool canonicalize_colors = true;
    /// Edge-prefix depth at which the enumeration tree is cut into tasks.
    std::size_t split_depth = 0;
    /// Exhaustive: search nodes (single edge-color assignments). Random: samples.
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    /// Overrides a checker's component-order target.
    std::optional<Rational> target;
    std::size_t workers = 1;
};

enum class OutcomeKind { AllSatisfy, Counterexample, BudgetExhausted, MinMaxValue };

std::string_view name(OutcomeKind kind) noexcept;

struct SearchOutcome {
    OutcomeKind kind = OutcomeKind::AllSatisfy;
    /// MinMaxValue: the exact value; BudgetExhausted in min-max: best upper bound.
    std::optional<std::size_t> value;
    std::optional<std::size_t> lower_bound;
    std::optional<EdgeColoring> witness;
    std::uint64_t examined = 0;
    bool exhaustive = true;
    std::chrono::nanoseconds elapsed{0};
};

enum class Checker { Complete, R2, Conjecture, Power, Additive };

std::string_view name(Checker checker) noexcept;
/// Throws InvalidSpec on an unknown name.
Checker parse_checker(std::string_view text);

/// Degree precondition of the checker's theorem for this host.
bool checker_precondition(Checker checker, const BipartiteGraph& host, std::size_t r);
/// Component property the checker's theorem promises; cfg_target overrides order targets.
ComponentGoal checker_goal(Checker checker, const BipartiteGraph& host, std::size_t r,
                           const std::optional<Rational>& cfg_target = std::nullopt);

/// Result of enumerating colorings in which no component meets the goal.
struct AvoidResult {
    bool found = false;
    bool budget_hit = false;
    std::vector<Color> colors;   // lexicographically least avoiding coloring, host edge order
    std::uint64_t examined = 0;
};

/// Parallel pruned enumeration (OpenMP over split_depth prefixes). The
/// result does not depend on cfg.workers or cfg.split_depth.
AvoidResult find_avoiding_coloring(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal, const SearchConfig& cfg);

/// Counterexample: some r-coloring has every component below target
/// (witness attached). AllSatisfy: none exists.
SearchOutcome exists_coloring_below(const BipartiteGraph& host, std::size_t r, const Rational& target, const SearchConfig& cfg);

/// Minimum over r-colorings of the largest monochromatic component order,
/// with the lexicographically least coloring achieving it.
SearchOutcome min_max_mono_component(const BipartiteGraph& host, std::size_t r, const SearchConfig& cfg);

/// All colorings against the checker's theorem. Throws PreconditionViolated
/// when the host does not meet the checker's degree condition.
SearchOutcome exhaustive_verify(const BipartiteGraph& host, std::size_t r, Checker checker, const SearchConfig& cfg);

/// cfg.budget uniform colorings (each edge independently uniform over r
/// colors); sample i draws from a stream derived from (seed, i) only.
SearchOutcome random_search(const BipartiteGraph& host, std::size_t r, Checker checker, const SearchConfig& cfg);
SearchOutcome random_search(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal, const SearchConfig& cfg);

/// Largest component order of a host-ordered coloring, via the rollback union-find.
std::size_t max_component_order(const BipartiteGraph& host, std::size_t r, std::span<const Color> colors);

/// SplitMix64 stream; sample streams for random search are keyed by (seed, index).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}
    static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound) by multiply-shift.
    std::uint32_t below(std::uint32_t bound) noexcept
    {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace mono
