#include "mono/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mono/analysis.hpp"
#include "mono/frontier.hpp"
#include "mono/io.hpp"
#include "mono/search.hpp"

namespace mono::cli {

namespace {

    using io::Json;

    /// What a subcommand produced, before the manifest is written.
    struct Result {
        int code = kOk;
        std::string output;
        std::optional<std::string> input_digest;
        std::string summary;
    };

    std::size_t default_workers()
    {
        if (const char* env = std::getenv("MONO_WORKERS")) {
            try {
                const auto v = std::stoul(env);
                if (v >= 1)
                    return v;
            } catch (const std::exception&) {
            }
        }
        return 1;
    }

    std::map<std::string, std::size_t> parse_params(const std::string& text, const std::string& whole)
    {
        std::map<std::string, std::size_t> params;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::InvalidSpec, "bad generator parameter '" + item + "' in '" + whole + "'");
            try {
                params[item.substr(0, eq)] = std::stoul(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidSpec, "bad generator parameter '" + item + "' in '" + whole + "'");
            }
        }
        return params;
    }

    ConstructionSpec spec_from(const std::string& variant, const std::map<std::string, std::size_t>& p)
    {
        auto get = [&](const char* key, std::size_t fallback) {
            auto it = p.find(key);
            return it == p.end() ? fallback : it->second;
        };
        ConstructionSpec s;
        if (variant == "cyclic")
            s.variant = ConstructionVariant::CyclicFactorization;
        else if (variant == "lower-bound")
            s.variant = ConstructionVariant::LowerBound;
        else if (variant == "double-star-gap")
            s.variant = ConstructionVariant::DoubleStarGap;
        else if (variant == "circulant")
            s.variant = ConstructionVariant::CompleteMinusCirculant;
        else if (variant == "complete")
            s.variant = ConstructionVariant::Complete;
        else
            throw Error(ErrorKind::InvalidSpec, "unknown construction '" + variant + "'");
        s.k = get("k", 1);
        s.r = get("r", 2);
        s.t1 = get("t1", 1);
        s.t2 = get("t2", 1);
        s.m = get("m", 1);
        s.n = get("n", s.m);
        s.d = get("d", 0);
        return s;
    }

    void write_text(const std::string& path, const std::string& text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
        f << text;
    }

    int search_exit(OutcomeKind kind)
    {
        switch (kind) {
        case OutcomeKind::Counterexample: return kCounterexample;
        case OutcomeKind::BudgetExhausted: return kBudget;
        default: return kOk;
        }
    }

    std::vector<Rational> parse_grid(const std::string& text)
    {
        std::vector<Rational> grid;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                grid.push_back(parse_rational(item));
        return grid;
    }

}  // namespace

ColoredGraph resolve_host(const std::string& text)
{
    if (std::filesystem::is_regular_file(text)) {
        auto loaded = io::graph_from_json(io::load_file(text));
        auto col = loaded.coloring ? *loaded.coloring : EdgeColoring::single_color(loaded.host);
        return {std::move(loaded.host), std::move(col)};
    }
    const auto colon = text.find(':');
    const std::string variant = text.substr(0, colon);
    const auto params = parse_params(colon == std::string::npos ? "" : text.substr(colon + 1), text);
    if (variant != "cyclic" && variant != "lower-bound" && variant != "double-star-gap" && variant != "circulant" && variant != "complete")
        throw Error(ErrorKind::Parse, "'" + text + "' is neither a readable file nor a generator spec");
    return generate(spec_from(variant, params));
}

namespace {

    struct GenArgs {
        std::string variant;
        std::size_t k = 1, r = 2, t1 = 1, t2 = 1, m = 1, n = 0, d = 0;
        std::string out;
    };

    Result cmd_gen(const GenArgs& a)
    {
        std::map<std::string, std::size_t> p{{"k", a.k}, {"r", a.r}, {"t1", a.t1}, {"t2", a.t2}, {"m", a.m}, {"n", a.n == 0 ? a.m : a.n}, {"d", a.d}};
        const auto spec = spec_from(a.variant, p);
        const auto g = generate(spec);
        const auto cert = certify(spec, g);
        const bool uncolored = spec.variant == ConstructionVariant::CompleteMinusCirculant || spec.variant == ConstructionVariant::Complete;
        const Json graph = io::graph_to_json(g.host, uncolored ? nullptr : &g.coloring);
        const Json certj = io::to_json(cert);

        Result res;
        res.input_digest = io::sha256_hex(io::canonical_text(graph));
        if (a.out.empty()) {
            Json j;
            j["graph"] = graph;
            j["certificate"] = certj;
            res.output = io::report_text(j);
        } else {
            write_text(a.out, io::canonical_text(graph) + "\n");
            write_text(a.out + ".cert.json", io::report_text(certj));
            res.output = io::report_text(certj);
        }
        res.code = cert.checks_passed ? kOk : kCounterexample;
        res.summary = cert.checks_passed ? "certificate passed" : "certificate failed: " + cert.notes;
        return res;
    }

    struct AnalyzeArgs {
        std::string input;
        std::string check;
        std::optional<std::size_t> r;
        std::optional<std::size_t> color;
        std::optional<std::string> delta;
        bool refined = false;
        std::string variant = "power";
    };

    Result cmd_analyze(const AnalyzeArgs& a)
    {
        const Json j = io::load_file(a.input);
        Result res;
        Json report;

        if (a.check == "corollary") {
            const auto g = io::general_graph_from_json(j);
            res.input_digest = io::sha256_hex(io::canonical_text(io::graph_to_json(g)));
            CorollaryVariant variant;
            if (a.variant == "power")
                variant = CorollaryVariant::PowerBound;
            else if (a.variant == "7/8")
                variant = CorollaryVariant::SevenEighths;
            else
                throw Error(ErrorKind::InvalidSpec, "unknown corollary variant '" + a.variant + "'");
            const auto rep = check_corollary(g, variant);
            report = io::to_json(rep);
            res.code = rep.violated() ? kCounterexample : kOk;
            res.summary = rep.applicable ? (rep.holds ? "holds" : "violated") : "not applicable";
            res.output = io::report_text(report);
            return res;
        }

        auto loaded = io::graph_from_json(j);
        const EdgeColoring col = loaded.coloring ? *loaded.coloring : EdgeColoring::single_color(loaded.host, a.r.value_or(1));
        res.input_digest = io::sha256_hex(io::canonical_text(io::graph_to_json(loaded.host, loaded.coloring ? &col : nullptr)));
        const std::size_t r = a.r.value_or(loaded.coloring ? col.r() : 2);

        auto single_class = [&]() -> BipartiteGraph {
            if (!loaded.coloring && !a.color)
                return loaded.host;
            return col.color_class(static_cast<Color>(a.color.value_or(0)));
        };

        if (a.check == "r2" || a.check == "conjecture" || a.check == "power" || a.check == "additive" || a.check == "complete") {
            Verdict v;
            if (a.check == "r2")
                v = check_theorem_two_colors(loaded.host, col);
            else if (a.check == "conjecture")
                v = check_conjecture_instance(loaded.host, col, r, a.refined);
            else if (a.check == "power")
                v = check_tetel_instance(loaded.host, col, r);
            else if (a.check == "additive")
                v = check_additive_theorem(loaded.host, col);
            else
                v = check_complete_bound(loaded.host, col, r);
            report = io::to_json(v);
            res.code = v.violated() && !a.refined ? kCounterexample : kOk;
            res.summary = v.applicable ? (v.holds ? "holds" : "violated") : "not applicable";
        } else if (a.check == "stability") {
            BipartiteGraph g = single_class();
            const bool swapped = g.m() > g.n();
            if (swapped)
                g = g.transposed();
            const auto s = a.delta ? stability_report(g, std::max<std::size_t>(r, 2), parse_rational(*a.delta))
                                   : stability_report(g, std::max<std::size_t>(r, 2));
            report = io::to_json(s);
            report["sides_swapped"] = swapped;
            res.code = s.hypothesis_ok && !s.dichotomy() ? kCounterexample : kOk;
            res.summary = s.case_i ? "case_i" : (s.case_ii ? "case_ii" : "neither case");
        } else if (a.check == "mainlemma") {
            const auto rep = main_lemma_report(single_class(), std::max<std::size_t>(r, 2));
            report = io::to_json(rep);
            res.code = rep.applicable() && !rep.all_flags() ? kCounterexample : kOk;
            res.summary = rep.applicable() ? (rep.all_flags() ? "flags hold" : "flags violated") : "not applicable";
        } else {
            throw Error(ErrorKind::InvalidSpec, "unknown check '" + a.check + "'");
        }
        res.output = io::report_text(report);
        return res;
    }

    struct SearchArgs {
        std::string host;
        std::size_t r = 2;
        std::string mode = "minmax";
        std::optional<std::string> check;
        std::optional<std::string> target;
        std::uint64_t seed = 0;
        std::size_t split_depth = 6;
        std::optional<std::uint64_t> budget;
        std::size_t workers = 1;
        bool no_canonical = false;
        // frontier
        std::size_t total_n = 16;
        std::string alphas;
        std::string family = "all";
        std::size_t exhaustive_edges = 24;
    };

    SearchConfig config_from(const SearchArgs& a)
    {
        SearchConfig cfg;
        cfg.seed = a.seed;
        cfg.split_depth = a.split_depth;
        cfg.workers = a.workers;
        cfg.canonicalize_colors = !a.no_canonical;
        if (a.budget)
            cfg.budget = *a.budget;
        if (a.target)
            cfg.target = parse_rational(*a.target);
        return cfg;
    }

    Result cmd_frontier(const SearchArgs& a)
    {
        FrontierConfig fc;
        fc.search = config_from(a);
        if (!a.budget)
            fc.search.budget = 100000;
        fc.exhaustive_edge_limit = a.exhaustive_edges;
        const auto rows = alpha_frontier(a.total_n, parse_grid(a.alphas), parse_family(a.family), a.r, fc);
        Result res;
        res.output = io::report_text(io::to_json(rows, a.total_n));
        res.summary = std::to_string(rows.size()) + " rows";
        return res;
    }

    Result cmd_search(const SearchArgs& a)
    {
        if (a.mode == "frontier")
            return cmd_frontier(a);
        const auto hg = resolve_host(a.host);
        const auto& host = hg.host;
        SearchConfig cfg = config_from(a);
        Result res;
        res.input_digest = io::sha256_hex(io::canonical_text(io::graph_to_json(host)));

        SearchOutcome out;
        if (a.mode == "minmax") {
            out = min_max_mono_component(host, a.r, cfg);
        } else if (a.mode == "below") {
            if (!cfg.target)
                throw Error(ErrorKind::InvalidSpec, "--mode below needs --target");
            out = exists_coloring_below(host, a.r, *cfg.target, cfg);
        } else if (a.mode == "verify") {
            if (!a.check)
                throw Error(ErrorKind::InvalidSpec, "--mode verify needs --check");
            out = exhaustive_verify(host, a.r, parse_checker(*a.check), cfg);
        } else if (a.mode == "random") {
            cfg.mode = SearchMode::Random;
            if (!a.budget)
                cfg.budget = 100000;
            if (a.check)
                out = random_search(host, a.r, parse_checker(*a.check), cfg);
            else if (cfg.target)
                out = random_search(host, a.r, ComponentGoal::order_at_least(*cfg.target), cfg);
            else
                throw Error(ErrorKind::InvalidSpec, "--mode random needs --check or --target");
        } else {
            throw Error(ErrorKind::InvalidSpec, "unknown search mode '" + a.mode + "'");
        }
        res.output = io::report_text(io::to_json(out, a.mode));
        res.code = search_exit(out.kind);
        res.summary = std::string(name(out.kind));
        return res;
    }

    void write_manifest(const std::string& path, const std::vector<std::string>& args, const Result& res,
                        std::optional<std::uint64_t> seed, std::chrono::nanoseconds elapsed)
    {
        Json m;
        m["version"] = kVersion;
        m["command"] = args;
        m["input_digest"] = res.input_digest ? Json(*res.input_digest) : Json(nullptr);
        m["seed"] = seed ? Json(*seed) : Json(nullptr);
        m["timings"] = Json{{"elapsed_ns", elapsed.count()}};
        m["outcome"] = Json{{"exit_code", res.code}, {"summary", res.summary}, {"output_digest", io::sha256_hex(res.output)}};
        write_text(path, io::report_text(m));
    }

    int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err)
    {
        const Json m = io::load_file(path);
        if (!m.contains("command") || !m["command"].is_array() || !m.contains("outcome"))
            throw Error(ErrorKind::Parse, "'" + path + "' is not a run manifest");
        std::vector<std::string> args = m["command"].get<std::vector<std::string>>();
        args.insert(args.begin(), "--no-manifest");
        std::ostringstream captured;
        const int code = run(args, captured, err);
        const std::string digest = io::sha256_hex(captured.str());
        const bool same = digest == m["outcome"]["output_digest"].get<std::string>() && code == m["outcome"]["exit_code"].get<int>();
        Json j;
        j["reproduced"] = same;
        j["exit_code"] = code;
        j["output_digest"] = digest;
        j["expected_digest"] = m["outcome"]["output_digest"];
        out << io::report_text(j);
        return same ? kOk : kCounterexample;
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monochromatic components in edge-colored bipartite graphs", "monocomp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string manifest_path = "monocomp-manifest.json";
    bool no_manifest = false;
    app.add_option("--manifest", manifest_path, "Where to write the run manifest")->capture_default_str();
    app.add_flag("--no-manifest", no_manifest, "Skip writing the run manifest");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a construction with its certificate");
    gen_cmd->add_option("variant", gen.variant, "cyclic | lower-bound | double-star-gap | circulant | complete")->required();
    gen_cmd->add_option("--k", gen.k);
    gen_cmd->add_option("--r", gen.r);
    gen_cmd->add_option("--t1", gen.t1);
    gen_cmd->add_option("--t2", gen.t2);
    gen_cmd->add_option("--m", gen.m);
    gen_cmd->add_option("--n", gen.n);
    gen_cmd->add_option("--d", gen.d);
    gen_cmd->add_option("--out", gen.out, "Write the graph here and the certificate to <out>.cert.json");

    AnalyzeArgs an;
    auto* an_cmd = app.add_subcommand("analyze", "Check one theorem or lemma on a graph file");
    an_cmd->add_option("input", an.input, "Canonical graph JSON")->required();
    an_cmd->add_option("--check", an.check, "r2 | conjecture | power | additive | complete | stability | mainlemma | corollary")->required();
    an_cmd->add_option("--r", an.r);
    an_cmd->add_option("--color", an.color, "Color class for stability / mainlemma");
    an_cmd->add_option("--delta", an.delta, "Explicit delta for stability, as p/q");
    an_cmd->add_flag("--refined", an.refined, "Weak degree inequalities unless both are equalities (recorded only)");
    an_cmd->add_option("--variant", an.variant, "Corollary variant: power | 7/8")->capture_default_str();

    SearchArgs sa;
    sa.workers = default_workers();
    auto add_search_opts = [&](CLI::App* cmd, bool needs_host) {
        if (needs_host)
            cmd->add_option("--host", sa.host, "Graph file or generator spec")->required();
        cmd->add_option("--r", sa.r)->capture_default_str();
        cmd->add_option("--seed", sa.seed)->capture_default_str();
        cmd->add_option("--split-depth", sa.split_depth)->capture_default_str();
        cmd->add_option("--budget", sa.budget);
        cmd->add_option("--workers", sa.workers, "Defaults to $MONO_WORKERS or 1")->check(CLI::PositiveNumber);
        cmd->add_option("--n", sa.total_n, "Total vertex count for frontier scans")->capture_default_str();
        cmd->add_option("--alphas", sa.alphas, "Comma-separated alpha grid, e.g. 1/8,1/6");
        cmd->add_option("--family", sa.family, "circulant | blocks | all")->capture_default_str();
        cmd->add_option("--exhaustive-edges", sa.exhaustive_edges)->capture_default_str();
    };
    auto* search_cmd = app.add_subcommand("search", "Adversarial search over colorings");
    search_cmd->add_option("--host", sa.host, "Graph file or generator spec");
    search_cmd->add_option("--mode", sa.mode, "minmax | below | verify | random | frontier")->capture_default_str();
    search_cmd->add_option("--check", sa.check, "complete | r2 | conjecture | power | additive");
    search_cmd->add_option("--target", sa.target, "Component order threshold, p/q allowed");
    search_cmd->add_flag("--no-canonical", sa.no_canonical, "Enumerate all color permutations");
    add_search_opts(search_cmd, false);

    auto* scan_cmd = app.add_subcommand("scan", "Alpha frontier scan (exploratory)");
    add_search_opts(scan_cmd, false);

    std::string replay_path;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run a manifest and compare its output digest");
    replay_cmd->add_option("manifest", replay_path)->required();

    std::vector<std::string> argv_store{"monocomp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Result res;
    std::optional<std::uint64_t> seed;
    try {
        if (*replay_cmd)
            return cmd_replay(replay_path, out, err);
        if (*gen_cmd) {
            res = cmd_gen(gen);
        } else if (*an_cmd) {
            res = cmd_analyze(an);
        } else if (*search_cmd) {
            if (sa.mode != "frontier" && sa.host.empty())
                throw Error(ErrorKind::InvalidSpec, "search needs --host");
            seed = sa.seed;
            res = cmd_search(sa);
        } else if (*scan_cmd) {
            seed = sa.seed;
            res = cmd_frontier(sa);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    out << res.output;
    if (!no_manifest) {
        try {
            write_manifest(manifest_path, args, res, seed, std::chrono::steady_clock::now() - start);
        } catch (const Error& e) {
            err << "warning: " << e.what() << "\n";
        }
    }
    return res.code;
}

}  // namespace mono::cli
