#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mono/bigraph.hpp"
#include "mono/rational.hpp"
#include "mono/search.hpp"

namespace mono {

enum class HostFamily { Circulant, Blocks, All };

HostFamily parse_family(std::string_view text);
std::string_view name(HostFamily family) noexcept;

struct FrontierHost {
    std::string family;
    std::size_t m = 0, n = 0, removed = 0;  // removed: d for circulant, block side for blocks
    std::size_t edges = 0;
    bool exhaustive = false;
    SearchOutcome outcome;
};

/// One grid value. Exploratory evidence only: "no-counterexample-found" is
/// not a proof outside the exhaustively searched hosts.
struct FrontierRow {
    Rational alpha;
    std::vector<FrontierHost> hosts;
    std::string verdict;  // "no-hosts" | "no-counterexample-found" | "counterexample"
};

struct FrontierConfig {
    SearchConfig search;
    /// Hosts with at most this many edges are searched exhaustively.
    std::size_t exhaustive_edge_limit = 24;
};

/// Hosts on total_n vertices, |Y| >= |X| > 2 alpha N, with
/// delta(X,Y) >= |Y| - alpha N and delta(Y,X) >= |X| - alpha N (verified
/// exactly), searched for a 2-coloring with no component on >= N/2 vertices.
/// Circulant: complete_minus_circulant(|X|, |Y|, floor(alpha N)).
/// Blocks: K_{|X|,|Y|} minus a complete K_{s,s}, s = floor(alpha N).
std::vector<FrontierRow> alpha_frontier(std::size_t total_n, const std::vector<Rational>& alpha_grid, HostFamily family,
                                        std::size_t r, const FrontierConfig& cfg);

}  // namespace mono
