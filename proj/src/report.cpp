#include "contgraph/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "contgraph/baselines.hpp"
#include "contgraph/coloring.hpp"
#include "contgraph/covering.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/io.hpp"
#include "contgraph/metric.hpp"
#include "contgraph/packing.hpp"

namespace contgraph {

void ExperimentReport::add_row(std::vector<std::string> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("report row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
}

// Graph families that ignore n contribute a single instance.
std::vector<ContinuousGraph> instances(const std::string& family, IntRange range)
{
    if (family == "envelope" || family == "planar8")
        return {generate(family, 0)};
    if (range.lo > range.hi)
        throw InvalidInput("empty range " + std::to_string(range.lo) + ".." + std::to_string(range.hi));
    std::vector<ContinuousGraph> out;
    for (int n = range.lo; n <= range.hi; ++n)
        out.push_back(generate(family, n));
    return out;
}

std::string ratio(int num, int den)
{
    return den == 0 ? "-" : Rational(num, den).str();
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

}  // namespace

std::string ExperimentReport::to_csv() const
{
    std::ostringstream out;
    csv_line(out, columns);
    for (const auto& row : rows)
        csv_line(out, row);
    return out.str();
}

std::string ExperimentReport::to_text() const
{
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            out << (c ? "  " : "") << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        out << '\n';
    };
    line(columns);
    for (const auto& row : rows)
        line(row);
    return out.str();
}

IntRange parse_range(const std::string& text)
{
    auto as_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw InvalidInput("expected range a..b, got '" + text + "'");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = as_int(text);
        return {v, v};
    }
    IntRange r{as_int(text.substr(0, dots)), as_int(text.substr(dots + 2))};
    if (r.lo > r.hi)
        throw InvalidInput("range '" + text + "' is empty");
    return r;
}

ExperimentReport run_gap_report(const std::string& family, IntRange n_range, std::int64_t denominator, const SearchOptions& options)
{
    ExperimentReport rep;
    rep.columns = {"family", "n", "m", "alpha", "alpha1", "alpha_ratio", "beta", "beta1", "beta_ratio", "duality",
                   "alpha1_kind", "beta1_kind", "grid_denom"};
    const Rational one(1);
    for (const ContinuousGraph& g : instances(family, n_range)) {
        CombinatorialGraph cg(g);
        int alpha = alpha_exact(cg), beta = beta_exact(cg);
        PackingSolution pack = max_packing_grid_exact(g, one, denominator, options);
        CoverSolution cover = min_cover_grid_exact(g, one, denominator, options);
        bool exact = pack.status == SearchStatus::optimal && cover.status == SearchStatus::optimal;
        std::string duality = !exact ? "unknown" : yes_no(pack.value() + cover.value() == g.num_endpoints());
        rep.add_row({family, std::to_string(g.num_endpoints()), std::to_string(g.num_edges()), std::to_string(alpha),
                     std::to_string(pack.value()), ratio(pack.value(), alpha), std::to_string(beta), std::to_string(cover.value()),
                     ratio(beta, cover.value()), duality, to_string(pack.kind), to_string(cover.kind), std::to_string(denominator)});
    }
    return rep;
}

ExperimentReport run_duality_report(const std::string& family, IntRange n_range, std::int64_t denominator, int levels,
                                    const SearchOptions& options)
{
    ExperimentReport rep;
    rep.columns = {"family", "n", "alpha1", "beta1", "sum", "holds", "alpha1_stable", "beta1_stable", "kind", "grid_denom", "levels"};
    for (const ContinuousGraph& g : instances(family, n_range)) {
        DualityReport d = duality_report(g, denominator, levels, options);
        rep.add_row({family, std::to_string(d.n), std::to_string(d.alpha1), std::to_string(d.beta1), std::to_string(d.alpha1 + d.beta1),
                     yes_no(d.holds), yes_no(d.alpha_stable), yes_no(d.beta_stable),
                     to_string(d.exact ? CertificateKind::grid_certified : CertificateKind::bound), std::to_string(denominator),
                     std::to_string(levels)});
    }
    return rep;
}

ExperimentReport run_coloring_report(const std::string& family, IntRange n_range, std::int64_t denominator, int max_colors,
                                     int center_budget, const SearchOptions& options)
{
    ExperimentReport rep;
    rep.columns = {"family", "n", "constructive_colors", "grid_exact_colors", "lower_bound", "attempts", "grid_denom", "budget"};
    ColoringSearchOptions copts;
    copts.denominator = denominator;
    copts.max_colors = max_colors;
    copts.center_budget = center_budget;
    copts.search = options;
    for (const ContinuousGraph& g : instances(family, n_range)) {
        std::string constructive = "-";
        if (family == "complete" && g.num_endpoints() >= 2) {
            ColoredCover cc = kn_half_coloring(g.num_endpoints());
            constructive = verify_coloring(g, cc) ? std::to_string(cc.colors_used()) : "invalid";
        }
        std::string exact = "-", lower = "-", attempts = "-", budget = "-";
        if (g.num_edges() > 0) {
            ColoringSearchResult res = min_colors_exact(g, copts);
            exact = res.colors ? std::to_string(*res.colors) : "unresolved";
            lower = std::to_string(res.lower_bound);
            attempts.clear();
            for (std::size_t i = 0; i < res.attempts.size(); ++i)
                attempts += (i ? " " : "") + std::to_string(i + 1) + ":" + res.attempts[i];
            budget = std::to_string(res.center_budget);
        }
        rep.add_row({family, std::to_string(g.num_endpoints()), constructive, exact, lower, attempts, std::to_string(denominator), budget});
    }
    return rep;
}

ExperimentReport run_bramble_report(const std::vector<std::pair<std::string, ContinuousGraph>>& graphs, std::int64_t denominator,
                                    const BrambleCaps& caps, const SearchOptions& options)
{
    ExperimentReport rep;
    rep.columns = {"graph", "n", "m", "treewidth", "bramble_number", "continuous_1_bramble", "complete", "grid_denom",
                   "max_subtrees", "max_segments"};
    for (const auto& [name, g] : graphs) {
        CombinatorialGraph cg(g);
        BrambleNumberResult cont = treewidth_continuous(g, denominator, caps, options);
        rep.add_row({name, std::to_string(g.num_endpoints()), std::to_string(g.num_edges()), std::to_string(treewidth_exact(cg)),
                     std::to_string(bramble_number_exact(cg)), std::to_string(cont.value), yes_no(cont.complete),
                     std::to_string(denominator), std::to_string(caps.max_subtrees), std::to_string(caps.max_segments)});
    }
    return rep;
}

ExperimentReport run_sum_table(const std::string& family, IntRange n_range, const std::vector<Rational>& radii, const SearchOptions& options)
{
    ExperimentReport rep;
    rep.columns = {"family", "n", "m", "r", "alpha_r", "beta_r", "sum", "kind", "grid_denom"};
    for (const ContinuousGraph& g : instances(family, n_range))
        for (const Rational& r : radii) {
            std::int64_t d = default_denominator(r);
            PackingSolution pack = max_packing_grid_exact(g, r, d, options);
            CoverSolution cover = min_cover_grid_exact(g, r, d, options);
            bool exact = pack.status == SearchStatus::optimal && cover.status == SearchStatus::optimal;
            rep.add_row({family, std::to_string(g.num_endpoints()), std::to_string(g.num_edges()), r.str(), std::to_string(pack.value()),
                         std::to_string(cover.value()), std::to_string(pack.value() + cover.value()),
                         to_string(exact ? CertificateKind::grid_certified : CertificateKind::bound), std::to_string(d)});
        }
    return rep;
}

SolutionKind parse_solution_kind(const std::string& s)
{
    if (s == "packing" || s == "indep")
        return SolutionKind::packing;
    if (s == "cover")
        return SolutionKind::cover;
    if (s == "coloring" || s == "color")
        return SolutionKind::coloring;
    if (s == "bramble")
        return SolutionKind::bramble;
    throw InvalidInput("unknown solution kind '" + s + "' (packing, cover, coloring, bramble)");
}

VerifyOutcome verify_solution_file(SolutionKind kind, const std::string& graph_path, const std::string& solution_path,
                                   const std::optional<Rational>& radius)
{
    ContinuousGraph g = read_graph_file(graph_path);
    auto in = open_input(solution_path);
    VerifyOutcome out;
    switch (kind) {
    case SolutionKind::packing: {
        SolutionFile sol = read_solution(g, in);
        if (auto v = find_packing_violation(g, sol.radius, sol.points)) {
            out.diagnostic = "points " + v->first.literal() + " and " + v->second.literal() + " at distance " + v->distance.str() +
                             " < 2r = " + (sol.radius * Rational(2)).str();
            return out;
        }
        out.ok = true;
        out.diagnostic = "valid packing: " + std::to_string(sol.points.size()) + " points pairwise >= " + (sol.radius * Rational(2)).str();
        return out;
    }
    case SolutionKind::cover: {
        SolutionFile sol = read_solution(g, in);
        if (auto gap = find_coverage_gap(g, sol.radius, sol.points)) {
            out.diagnostic = "uncovered " + gap->str();
            return out;
        }
        out.ok = true;
        out.diagnostic = "valid cover: " + std::to_string(sol.points.size()) + " balls of radius " + sol.radius.str();
        return out;
    }
    case SolutionKind::coloring: {
        ColoredCover cc = read_colored_cover(g, in);
        if (auto v = find_coloring_violation(g, cc)) {
            out.diagnostic = v->message;
            return out;
        }
        out.ok = true;
        out.diagnostic = "valid colouring: " + std::to_string(cc.entries.size()) + " balls in " + std::to_string(cc.colors_used()) + " colours";
        return out;
    }
    case SolutionKind::bramble: {
        if (!radius)
            throw InvalidInput("bramble verification needs a radius");
        std::vector<Subtree> subtrees = read_subtrees(g, in);
        for (std::size_t i = 0; i < subtrees.size(); ++i)
            if (!subtree_valid(g, subtrees[i])) {
                out.diagnostic = "subtree " + std::to_string(i + 1) + " (" + subtrees[i].literal() + ") is not connected and cycle-free";
                return out;
            }
        for (std::size_t i = 0; i < subtrees.size(); ++i)
            for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
                Distance d = subtree_distance(g, subtrees[i], subtrees[j]);
                if (d > Distance(*radius)) {
                    out.diagnostic = "subtrees " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " at distance " + d.str() +
                                     " > r = " + radius->str();
                    return out;
                }
            }
        out.ok = true;
        out.diagnostic = "valid " + radius->str() + "-bramble of " + std::to_string(subtrees.size()) + " subtrees";
        return out;
    }
    }
    return out;
}

std::string emit_figures_data(const ExperimentReport& report, const std::string& dir, const std::string& name)
{
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) / (name + ".csv")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << report.to_csv();
    return path;
}

}  // namespace contgraph
