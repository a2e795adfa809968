// Command-line front end: graph generation, solvers, bramble tools, baselines,
// reports and file verification.
//
// Exit codes: 0 ok / verified, 1 violated or infeasible, 2 usage or input
// error, 3 a node cap or size cap stopped an exact search.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "contgraph/baselines.hpp"
#include "contgraph/bramble.hpp"
#include "contgraph/coloring.hpp"
#include "contgraph/covering.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/io.hpp"
#include "contgraph/packing.hpp"
#include "contgraph/report.hpp"

using namespace contgraph;

namespace {

enum Exit { ok = 0, violated = 1, usage = 2, capped = 3 };

Rational parse_radius(const std::string& text)
{
    Rational r;
    try {
        r = Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("--r: ") + e.what());
    }
    if (r.sign() <= 0)
        throw InvalidInput("--r must be positive, got " + r.str());
    return r;
}

// Writes to `path`, or stdout when empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    fn(out);
}

struct Args {
    std::string graph;
    std::string radius;
    std::int64_t denom = 0;
    int refine = 0;
    std::string method = "exact";
    std::string out;
    int max_colors = 3;
    int budget = 0;
    std::string subtrees;
    int max_subtrees = BrambleCaps{}.max_subtrees;
    int max_segments = BrambleCaps{}.max_segments;
    int max_pool = BrambleCaps{}.max_pool;
    std::string family;
    int n = 0;
    std::string n_range;
    std::string csv;
    bool text = false;
    std::string solution;
};

int finish_search(SearchStatus status)
{
    return status == SearchStatus::optimal ? ok : status == SearchStatus::node_cap ? capped : violated;
}

void report_refinement(const ContinuousGraph& g, const Rational& r, std::int64_t d, int levels, const GridSolver& solve)
{
    if (levels <= 0)
        return;
    bool stable = refinement_stable(g, r, solve, d, levels);
    std::cerr << "refinement D=" << d << " through D=" << (d << levels) << ": " << (stable ? "stable" : "CHANGED") << '\n';
}

int solve_indep(const Args& a)
{
    ContinuousGraph g = read_graph_file(a.graph);
    Rational r = parse_radius(a.radius);
    PackingSolution sol;
    if (a.method == "exact") {
        std::int64_t d = a.denom > 0 ? a.denom : default_denominator(r);
        sol = max_packing_grid_exact(g, r, d);
        std::cerr << "alpha_" << r.str() << " = " << sol.value() << " (" << to_string(sol.kind) << ", D=" << d << ", "
                  << to_string(sol.status) << ", bound " << sol.upper_bound << ")\n";
        report_refinement(g, r, d, a.refine, [](const ContinuousGraph& gg, const Rational& rr, std::int64_t dd) {
            return static_cast<std::int64_t>(max_packing_grid_exact(gg, rr, dd).value());
        });
    } else if (a.method == "greedy") {
        sol = greedy_edge_placement(g, r);
    } else if (a.method == "matching") {
        sol = matching_midpoints(g);
        sol.radius = r;
    } else {
        throw InvalidInput("--method for indep is exact, greedy or matching");
    }
    if (auto v = find_packing_violation(g, r, sol.points)) {
        std::cerr << "violation: " << v->first.literal() << " and " << v->second.literal() << " at distance " << v->distance.str()
                  << " < " << (r * Rational(2)).str() << '\n';
        return violated;
    }
    with_output(a.out, [&](std::ostream& out) { write_solution(out, r, sol.points, sol.kind); });
    return finish_search(sol.status);
}

int solve_cover(const Args& a)
{
    ContinuousGraph g = read_graph_file(a.graph);
    Rational r = parse_radius(a.radius);
    CoverSolution sol;
    if (a.method == "exact") {
        std::int64_t d = a.denom > 0 ? a.denom : default_denominator(r);
        sol = min_cover_grid_exact(g, r, d);
        if (sol.status == SearchStatus::infeasible) {
            std::cerr << "no cover by grid balls at D=" << d << '\n';
            return violated;
        }
        std::cerr << "beta_" << r.str() << " = " << sol.value() << " (" << to_string(sol.kind) << ", D=" << d << ", "
                  << to_string(sol.status) << ", bound " << sol.lower_bound << ")\n";
        report_refinement(g, r, d, a.refine, [](const ContinuousGraph& gg, const Rational& rr, std::int64_t dd) {
            return static_cast<std::int64_t>(min_cover_grid_exact(gg, rr, dd).value());
        });
    } else if (a.method == "matching") {
        if (r != Rational(1))
            throw InvalidInput("the matching cover uses r=1");
        MatchingCoverResult m = matching_midpoint_cover(g);
        if (!m.covers) {
            std::cerr << "matching midpoints leave " << m.gap->str() << " uncovered\n";
            return violated;
        }
        sol = m.solution;
    } else {
        throw InvalidInput("--method for cover is exact or matching");
    }
    with_output(a.out, [&](std::ostream& out) { write_solution(out, r, sol.centers, sol.kind); });
    return finish_search(sol.status);
}

int solve_color(const Args& a)
{
    ContinuousGraph g = read_graph_file(a.graph);
    if (!a.radius.empty() && parse_radius(a.radius) != Rational(1, 2))
        throw InvalidInput("colourings use r=1/2");
    ColoringSearchOptions opts;
    opts.denominator = a.denom > 0 ? a.denom : 4;
    opts.max_colors = a.max_colors;
    opts.center_budget = a.budget;
    ColoringSearchResult res = min_colors_exact(g, opts);
    std::cerr << "D=" << res.denominator << " budget=" << res.center_budget << " attempts:";
    for (std::size_t i = 0; i < res.attempts.size(); ++i)
        std::cerr << ' ' << i + 1 << '=' << res.attempts[i];
    std::cerr << '\n';
    if (res.witness)
        with_output(a.out, [&](std::ostream& out) { write_colored_cover(out, *res.witness); });
    if (res.colors)
        return ok;
    bool hit_cap = std::find(res.attempts.begin(), res.attempts.end(), "node-cap") != res.attempts.end();
    return hit_cap ? capped : violated;
}

std::vector<Subtree> load_subtrees(const ContinuousGraph& g, const std::string& path)
{
    if (path.empty())
        throw InvalidInput("--subtrees is required");
    auto in = open_input(path);
    return read_subtrees(g, in);
}

int bramble_check(const Args& a)
{
    VerifyOutcome v = verify_solution_file(SolutionKind::bramble, a.graph, a.subtrees, parse_radius(a.radius));
    (v.ok ? std::cout : std::cerr) << v.diagnostic << '\n';
    return v.ok ? ok : violated;
}

int bramble_order_cmd(const Args& a)
{
    ContinuousGraph g = read_graph_file(a.graph);
    Rational r = parse_radius(a.radius);
    std::vector<Subtree> subtrees = load_subtrees(g, a.subtrees);
    std::int64_t d = a.denom > 0 ? a.denom : default_denominator(r);
    if (!is_r_bramble(g, r, subtrees))
        std::cerr << "note: the subtrees are not an " << r.str() << "-bramble; order computed anyway\n";
    BrambleOrder o = bramble_order(g, subtrees, d);
    std::cout << "order " << o.order << '\n';
    for (const Point& p : o.hitting_set)
        std::cout << p.literal() << '\n';
    return finish_search(o.status);
}

int bramble_number_cmd(const Args& a)
{
    ContinuousGraph g = read_graph_file(a.graph);
    Rational r = parse_radius(a.radius);
    std::int64_t d = a.denom > 0 ? a.denom : default_denominator(r);
    BrambleCaps caps{a.max_subtrees, a.max_segments, a.max_pool};
    BrambleNumberResult res = r_bramble_number_bruteforce(g, r, d, caps);
    std::cerr << r.str() << "-bramble number " << res.value << " (" << (res.complete ? "grid-certified" : "lower bound, capped")
              << ", D=" << d << ", subtrees<=" << caps.max_subtrees << ", segments<=" << caps.max_segments << ", pool "
              << res.pool_size << ")\n";
    CombinatorialGraph cg(g);
    try {
        std::cerr << "treewidth " << treewidth_exact(cg) << ", combinatorial bramble number " << bramble_number_exact(cg) << '\n';
    } catch (const CapExceeded& e) {
        std::cerr << "combinatorial side skipped: " << e.what() << '\n';
    }
    with_output(a.out, [&](std::ostream& out) { write_subtrees(out, res.witness); });
    return res.complete ? ok : capped;
}

int baseline_cmd(const std::string& which, const Args& a)
{
    CombinatorialGraph cg(read_graph_file(a.graph));
    if (which == "alpha") {
        std::cout << alpha_exact(cg) << '\n';
    } else if (which == "beta") {
        std::cout << beta_exact(cg) << '\n';
    } else if (which == "chi") {
        std::cout << chi_exact(cg) << '\n';
    } else if (which == "matching") {
        auto m = max_matching(cg);
        std::cout << m.size() << '\n';
        for (const Edge& e : m)
            std::cout << e.u << ' ' << e.v << '\n';
    } else {
        std::cout << treewidth_exact(cg) << '\n';
    }
    return ok;
}

int report_cmd(const std::string& which, const Args& a)
{
    IntRange range = parse_range(a.n_range);
    ExperimentReport rep;
    if (which == "gap") {
        rep = run_gap_report(a.family, range, a.denom > 0 ? a.denom : 2);
    } else if (which == "duality") {
        rep = run_duality_report(a.family, range, a.denom > 0 ? a.denom : 2, a.refine > 0 ? a.refine : 1);
    } else if (which == "coloring") {
        rep = run_coloring_report(a.family, range, a.denom > 0 ? a.denom : 4, a.max_colors, a.budget);
    } else if (which == "sums") {
        std::vector<Rational> radii{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2)};
        rep = run_sum_table(a.family, range, radii);
    } else {
        std::vector<std::pair<std::string, ContinuousGraph>> graphs;
        for (int n = range.lo; n <= range.hi; ++n)
            graphs.emplace_back(a.family + std::to_string(n), generate(a.family, n));
        rep = run_bramble_report(graphs, a.denom > 0 ? a.denom : 2, BrambleCaps{a.max_subtrees, a.max_segments, a.max_pool});
    }
    if (!a.csv.empty()) {
        with_output(a.csv, [&](std::ostream& out) { out << rep.to_csv(); });
    }
    std::cout << (a.text ? rep.to_text() : rep.to_csv());
    return ok;
}

int verify_cmd(const std::string& which, const Args& a)
{
    std::optional<Rational> r;
    if (!a.radius.empty())
        r = parse_radius(a.radius);
    VerifyOutcome v = verify_solution_file(parse_solution_kind(which), a.graph, a.solution, r);
    (v.ok ? std::cout : std::cerr) << (v.ok ? "ok: " : "violated: ") << v.diagnostic << '\n';
    return v.ok ? ok : violated;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Packing, covering, colouring and brambles on continuous graphs"};
    app.require_subcommand(1);
    Args a;
    std::function<int()> action;

    auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", a.graph, "graph file")->required(); };
    auto radius_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--r", a.radius, "radius a/b or integer");
        if (required)
            o->required();
    };
    auto denom_opt = [&](CLI::App* sub) { sub->add_option("--grid-denom", a.denom, "grid denominator D")->check(CLI::PositiveNumber); };

    auto* gen = app.add_subcommand("gen", "write a generated graph file");
    gen->add_option("--family", a.family, "complete|path|cycle|star|empty|envelope|planar8")->required();
    gen->add_option("--n", a.n, "endpoint count");
    gen->add_option("--out", a.out, "output file (default stdout)");
    gen->callback([&] {
        action = [&] {
            ContinuousGraph g = generate(a.family, a.n);
            with_output(a.out, [&](std::ostream& out) { write_graph(out, g); });
            return static_cast<int>(ok);
        };
    });

    auto* solve = app.add_subcommand("solve", "packing, cover and colouring solvers");
    solve->require_subcommand(1);
    for (std::string kind : {"indep", "cover", "color"}) {
        auto* sub = solve->add_subcommand(kind);
        graph_opt(sub);
        radius_opt(sub, kind != "color");
        denom_opt(sub);
        sub->add_option("--out", a.out, "solution file (default stdout)");
        if (kind == "color") {
            sub->add_option("--max-colors", a.max_colors)->check(CLI::PositiveNumber);
            sub->add_option("--budget", a.budget, "maximum number of balls (default 2m)")->check(CLI::NonNegativeNumber);
            sub->callback([&] { action = [&] { return solve_color(a); }; });
            continue;
        }
        sub->add_option("--refine", a.refine, "also solve at 2D, 4D, ... this many times")->check(CLI::NonNegativeNumber);
        sub->add_option("--method", a.method, kind == "indep" ? "exact|greedy|matching" : "exact|matching");
        if (kind == "indep")
            sub->callback([&] { action = [&] { return solve_indep(a); }; });
        else
            sub->callback([&] { action = [&] { return solve_cover(a); }; });
    }

    auto* bramble = app.add_subcommand("bramble", "r-bramble tools");
    bramble->require_subcommand(1);
    for (std::string kind : {"check", "order", "number"}) {
        auto* sub = bramble->add_subcommand(kind);
        graph_opt(sub);
        radius_opt(sub, true);
        denom_opt(sub);
        if (kind == "number") {
            sub->add_option("--max-subtrees", a.max_subtrees)->check(CLI::PositiveNumber);
            sub->add_option("--max-segments", a.max_segments)->check(CLI::PositiveNumber);
            sub->add_option("--max-pool", a.max_pool)->check(CLI::PositiveNumber);
            sub->add_option("--out", a.out, "witness subtree file (default stdout)");
            sub->callback([&] { action = [&] { return bramble_number_cmd(a); }; });
        } else {
            sub->add_option("--subtrees", a.subtrees, "subtree file")->required();
            if (kind == "check")
                sub->callback([&] { action = [&] { return bramble_check(a); }; });
            else
                sub->callback([&] { action = [&] { return bramble_order_cmd(a); }; });
        }
    }

    auto* baseline = app.add_subcommand("baseline", "exact combinatorial solvers");
    baseline->require_subcommand(1);
    for (std::string kind : {"alpha", "beta", "chi", "matching", "treewidth"}) {
        auto* sub = baseline->add_subcommand(kind);
        graph_opt(sub);
        sub->callback([&, kind] { action = [&, kind] { return baseline_cmd(kind, a); }; });
    }

    auto* report = app.add_subcommand("report", "experiment tables as CSV");
    report->require_subcommand(1);
    for (std::string kind : {"gap", "duality", "coloring", "sums", "bramble"}) {
        auto* sub = report->add_subcommand(kind);
        sub->add_option("--family", a.family)->required();
        sub->add_option("--n-range", a.n_range, "a..b")->required();
        denom_opt(sub);
        sub->add_option("--csv", a.csv, "also write the CSV to this file");
        sub->add_flag("--text", a.text, "print an aligned table instead of CSV");
        if (kind == "duality")
            sub->add_option("--refine", a.refine, "refinement levels (default 1)")->check(CLI::PositiveNumber);
        if (kind == "coloring") {
            sub->add_option("--max-colors", a.max_colors)->check(CLI::PositiveNumber);
            sub->add_option("--budget", a.budget)->check(CLI::NonNegativeNumber);
        }
        if (kind == "bramble") {
            sub->add_option("--max-subtrees", a.max_subtrees)->check(CLI::PositiveNumber);
            sub->add_option("--max-segments", a.max_segments)->check(CLI::PositiveNumber);
        }
        sub->callback([&, kind] { action = [&, kind] { return report_cmd(kind, a); }; });
    }

    auto* verify = app.add_subcommand("verify", "check a solution file exactly");
    verify->require_subcommand(1);
    for (std::string kind : {"packing", "cover", "coloring", "bramble"}) {
        auto* sub = verify->add_subcommand(kind);
        graph_opt(sub);
        sub->add_option("--solution", a.solution, "solution or subtree file")->required();
        radius_opt(sub, kind == "bramble");
        sub->callback([&, kind] { action = [&, kind] { return verify_cmd(kind, a); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    try {
        return action();
    } catch (const CapExceeded& e) {
        std::cerr << "cap: " << e.what() << '\n';
        return capped;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return usage;
    }
}
