#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mono/bigraph.hpp"
#include "mono/search.hpp"

/// Serial reference implementations of the search kernel. They share no
/// code with the parallel path beyond the union-find and are kept to test
/// and benchmark it.
namespace mono::reference {

/// Single-threaded pruned depth-first search, no task splitting.
AvoidResult find_avoiding_coloring_serial(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal,
                                          bool canonicalize_colors);

/// Walks all r^|E| colorings in lexicographic order and recomputes every
/// component from scratch. Returns the least coloring with no component
/// meeting the goal, if any.
std::optional<std::vector<Color>> naive_find_avoiding(const BipartiteGraph& host, std::size_t r, const ComponentGoal& goal);

/// Exact min-max value by full enumeration (least witness among optima).
std::pair<std::size_t, std::vector<Color>> naive_min_max(const BipartiteGraph& host, std::size_t r);

/// Serial random sampling with the same per-sample streams as random_search.
std::optional<std::uint64_t> first_random_counterexample_serial(const BipartiteGraph& host, std::size_t r,
                                                                const ComponentGoal& goal, std::uint64_t seed,
                                                                std::uint64_t budget);

}  // namespace mono::reference
