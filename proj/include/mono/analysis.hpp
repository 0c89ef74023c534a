#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mono/bigraph.hpp"
#include "mono/general_graph.hpp"
#include "mono/rational.hpp"

namespace mono {

/// Outcome of checking one theorem on one colored instance.
///
/// `applicable` says whether the hypotheses hold; `holds` whether the
/// conclusion does. `holds` is computed either way, so a sharpness example
/// reports its (failed) conclusion next to applicable = false.
struct Verdict {
    std::string check;
    bool applicable = false;
    bool holds = false;
    Rational target;
    std::size_t largest_order = 0;
    std::optional<Component> witness;
    /// Achieved value minus target.
    Rational margin;
    std::string note;

    /// A counterexample to the checked statement.
    bool violated() const noexcept { return applicable && !holds; }
};

/// Two colors: delta(X,Y) > 2n/3 and delta(Y,X) > 2m/3 imply a component on >= (m+n)/2 vertices.
Verdict check_theorem_two_colors(const BipartiteGraph& host, const EdgeColoring& col);

/// Strict (1 - 1/(r+1)) degree condition, target (m+n)/r. With `refined`,
/// the weak inequalities are accepted unless both are equalities; that
/// variant is only recorded, never treated as a theorem.
Verdict check_conjecture_instance(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r, bool refined = false);

/// Degree condition with gamma = (m/n)^3 / (128 r^5), m <= n (sides swapped when needed).
Verdict check_tetel_instance(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r);

/// Two colors, additive condition: with N = m + n, |Y| >= |X| > N/4,
/// delta(X,Y) >= |Y| - N/8 and delta(Y,X) >= |X| - N/8, some component H
/// meets |H cap X| >= |X|/2 and |H cap Y| >= |Y|/2.
Verdict check_additive_theorem(const BipartiteGraph& host, const EdgeColoring& col);

/// Complete host: every r-coloring has a component on >= (m+n)/r vertices.
Verdict check_complete_bound(const BipartiteGraph& host, const EdgeColoring& col, std::size_t r);

/// Degree hypotheses alone, for search preconditions.
bool two_color_degrees_hold(const BipartiteGraph& host);
bool tetel_degrees_hold(const BipartiteGraph& host, std::size_t r);
bool additive_degrees_hold(const BipartiteGraph& host);

/// Stability of the density/double-star bound for one color class.
///
/// delta is defined by e(G) = (1 - delta) mn / r and clamped at 0 unless
/// given explicitly. With alpha = (m+n) delta / (r^2 n) and
/// beta = (m+n) delta / (r^2 m), an X-vertex is exceptional when its degree
/// is strictly below avg(X,Y) and deg <= avg(X,Y) - alpha^{1/3} n; a
/// Y-vertex likewise with beta^{1/3} m.
struct StabilityReport {
    std::size_t m = 0, n = 0, r = 0, edges = 0;
    Rational delta;
    Rational alpha, beta;
    bool hypothesis_ok = false;  // e(G) >= (1 - delta) mn / r
    std::vector<Vertex> exceptional_x, exceptional_y;
    std::size_t k_x = 0, k_y = 0;
    Rational defect_x, defect_y;
    std::size_t double_star_order = 0;
    bool case_i = false;   // double star on >= (m+n)/r vertices
    bool case_ii = false;  // k_x <= alpha^{1/3} m and k_y <= beta^{1/3} n

    bool dichotomy() const noexcept { return case_i || case_ii; }
};

/// Requires m <= n and at least one edge.
StabilityReport stability_report(const BipartiteGraph& g, std::size_t r);
StabilityReport stability_report(const BipartiteGraph& g, std::size_t r, const Rational& delta);

/// Structure of a color class with no component on (m+n)/r vertices: the r
/// largest components C_1..C_r and the uncovered remainder Z.
struct MainComponentsReport {
    std::size_t m = 0, n = 0, r = 0;
    Rational delta, alpha, beta;
    DegreeProfile degrees;
    std::vector<Component> components;   // up to r, by (order desc, min X)
    std::size_t component_count = 0;     // all components of g
    std::vector<Vertex> z_x, z_y;
    bool precondition_ok = false;        // delta <= min{n/(64 r^4 (m+n)), m/(64 r (m+n))}
    bool hypothesis_ok = false;          // no component on >= (m+n)/r vertices
    bool has_r_components = false;
    bool a = false, b = false, c = false, d = false, e = false;

    bool applicable() const noexcept { return precondition_ok && hypothesis_ok; }
    bool all_flags() const noexcept { return has_r_components && a && b && c && d && e; }
};

/// Requires at least one edge.
MainComponentsReport main_lemma_report(const BipartiteGraph& g, std::size_t r);

/// Two vertex sides with no edge of `avoided_color` between them, and the
/// bipartite graph they induce, recolored with the remaining r - 1 colors
/// in increasing order. X is the smaller side.
struct BipartitionReduction {
    Color avoided_color = 0;
    std::vector<Vertex> side_a, side_b;
    BipartiteGraph induced;
    EdgeColoring induced_coloring;
    /// induced X-index / Y-index back to the general vertex.
    std::vector<Vertex> x_vertices, y_vertices;
};

/// Splits the avoided color's components (isolated vertices count as
/// singletons) into two sides, each of size >= min_side. A component that
/// clears min_side together with its complement is split off alone;
/// otherwise components go largest-first to the lighter side. Returns
/// nullopt when neither yields two large enough sides.
std::optional<BipartitionReduction> bipartition_avoiding_color(const GeneralGraph& g, Color avoided_color, std::size_t min_side);

enum class CorollaryVariant { PowerBound, SevenEighths };

struct ReductionLink {
    Color avoided_color = 0;
    std::size_t min_side = 0;
    std::optional<BipartitionReduction> split;
    std::optional<Verdict> bipartite;
};

struct CorollaryReport {
    CorollaryVariant variant = CorollaryVariant::PowerBound;
    std::size_t n = 0, r = 0, min_degree = 0;
    bool applicable = false;
    bool holds = false;
    Rational target;
    Rational reduction_threshold;
    std::size_t largest_order = 0;
    std::optional<GeneralComponent> witness;
    Rational margin;
    /// Filled when no component reaches reduction_threshold.
    std::optional<ReductionLink> chain;

    bool violated() const noexcept { return applicable && !holds; }
};

/// PowerBound: delta(G) >= (1 - 1/(3072 (r-1)^5)) n, target n/(r-1), r >= 3.
/// SevenEighths: r = 3, delta(G) >= 7n/8, target n/2.
CorollaryReport check_corollary(const GeneralGraph& g, CorollaryVariant variant);

}  // namespace mono
