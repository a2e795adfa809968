// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "contgraph/baselines.hpp"
#include "contgraph/bramble.hpp"
#include "contgraph/coloring.hpp"
#include "contgraph/covering.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/metric.hpp"
#include "contgraph/packing.hpp"
#include "contgraph/report.hpp"
#include "oracles.hpp"

using namespace contgraph;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (pass)
                note << "failed: " << what;
            pass = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.pass = false;
        out.note << " (over the " << limit_seconds << " s budget)";
    }
    if (!out.pass)
        ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  [" << timing << "]";
    std::string note = out.note.str();
    if (!note.empty())
        std::cout << "  " << note;
    std::cout << std::endl;
}

std::vector<std::pair<std::string, ContinuousGraph>> test_family()
{
    std::vector<std::pair<std::string, ContinuousGraph>> out;
    for (int n = 2; n <= 6; ++n) {
        out.emplace_back("P" + std::to_string(n), generate("path", n));
        out.emplace_back("K" + std::to_string(n), generate("complete", n));
        out.emplace_back("S" + std::to_string(n), generate("star", n));
        if (n >= 3)
            out.emplace_back("C" + std::to_string(n), generate("cycle", n));
    }
    out.emplace_back("E4", generate("empty", 4));
    out.emplace_back("envelope", generate("envelope", 0));
    out.emplace_back("planar8", generate("planar8", 0));
    return out;
}

}  // namespace

int main()
{
    const Rational one(1);

    criterion(1, "alpha_1 + beta_1 = n on P2 P3 C3 C4 K4 K6 envelope, D=2 refined to D=8", 10, [&](Outcome& o) {
        std::vector<std::pair<std::string, ContinuousGraph>> suite{
            {"P2", generate("path", 2)},     {"P3", generate("path", 3)},     {"C3", generate("cycle", 3)},
            {"C4", generate("cycle", 4)},    {"K4", generate("complete", 4)}, {"K6", generate("complete", 6)},
            {"envelope", generate("envelope", 0)}};
        for (const auto& [name, g] : suite) {
            DualityReport d = duality_report(g, 2, 2);
            o.require(d.exact && d.holds, name + ": " + std::to_string(d.alpha1) + "+" + std::to_string(d.beta1) + " != " + std::to_string(d.n));
            o.require(d.alpha_stable && d.beta_stable, name + ": value changed under refinement");
            o.note << name << " " << d.alpha1 << "+" << d.beta1 << "=" << d.n << "; ";
        }
    });

    criterion(2, "K6 packing gap: alpha=1, matching midpoints give 3, grid alpha_1 in [3,6]", 30, [&](Outcome& o) {
        ContinuousGraph k6 = generate("complete", 6);
        o.require(alpha_exact(CombinatorialGraph(k6)) == 1, "alpha(K6) != 1");
        PackingSolution mids = matching_midpoints(k6);
        o.require(mids.value() == 3 && verify_packing(k6, one, mids.points), "matching midpoints are not a 3-point 1-packing");
        PackingSolution grid = max_packing_grid_exact(k6, one, 2);
        o.require(grid.status == SearchStatus::optimal && grid.value() >= 3 && grid.value() <= 6, "grid alpha_1 out of [3,6]");
        o.note << "grid alpha_1(K6) = " << grid.value() << " (" << to_string(grid.kind) << ", D=2)";
    });

    criterion(3, "K6 cover gap: beta=5, matching cover with 3 balls, ratio 5/3", 30, [&](Outcome& o) {
        ContinuousGraph k6 = generate("complete", 6);
        int beta = beta_exact(CombinatorialGraph(k6));
        o.require(beta == 5, "beta(K6) != 5");
        MatchingCoverResult m = matching_midpoint_cover(k6);
        o.require(m.covers && m.solution.value() == 3, "matching midpoints do not give a 3-ball 1-cover");
        CoverSolution grid = min_cover_grid_exact(k6, one, 2);
        o.require(grid.status == SearchStatus::optimal && grid.value() == 3, "grid beta_1(K6) != 3");
        Rational ratio(beta, grid.value());
        o.require(ratio == Rational(2) - Rational(2, 6), "ratio != 2 - 2/n");
        o.note << "beta/beta_1 = " << ratio.str();
    });

    criterion(4, "complete-graph colouring valid with ceil(n/2) colours, n = 2..10", 5, [&](Outcome& o) {
        for (int n = 2; n <= 10; ++n) {
            ColoredCover cc = kn_half_coloring(n);
            o.require(verify_coloring(generate("complete", n), cc), "invalid colouring for n=" + std::to_string(n));
            o.require(cc.colors_used() == (n + 1) / 2, "wrong colour count for n=" + std::to_string(n));
        }
    });

    criterion(5, "K4 needs exactly 2 colours at r=1/2", 0, [&](Outcome& o) {
        ContinuousGraph k4 = generate("complete", 4);
        ColoredCover layout = kn_half_coloring(4);
        o.require(verify_coloring(k4, layout) && layout.colors_used() == 2, "two-colour layout fails");
        o.require(single_color_impossible(k4), "one-colour impossibility check failed");
    });

    criterion(6, "greedy >= (1 - 1/(k+1)) * grid optimum on P2 C3 C4, r in {1/2,1/3,1/4}", 60, [&](Outcome& o) {
        for (const char* spec : {"path2", "cycle3", "cycle4"}) {
            std::string s(spec);
            ContinuousGraph g = generate(s.substr(0, s.size() - 1), s.back() - '0');
            for (const Rational& r : {Rational(1, 2), Rational(1, 3), Rational(1, 4)}) {
                int greedy = greedy_edge_placement(g, r).value();
                PackingSolution exact = max_packing_grid_exact(g, r, default_denominator(r));
                std::int64_t k = (one / (Rational(2) * r)).floor_i64();
                Rational need = (one - Rational(1, k + 1)) * Rational(exact.value());
                o.require(exact.status == SearchStatus::optimal && Rational(greedy) >= need,
                          s + " r=" + r.str() + ": greedy " + std::to_string(greedy) + " < " + need.str());
            }
        }
    });

    criterion(7, "alpha_r <= n + m/r and alpha_1 <= n across the test family", 0, [&](Outcome& o) {
        for (const auto& [name, g] : test_family())
            for (const Rational& r : {Rational(1, 3), Rational(1, 2), Rational(2, 3), one, Rational(3, 2)}) {
                PackingSolution s = max_packing_grid_exact(g, r, default_denominator(r));
                o.require(s.status == SearchStatus::optimal, name + " r=" + r.str() + ": search capped");
                o.require(Rational(s.value()) <= trivial_upper_bound(g, r), name + " r=" + r.str() + ": above n + m/r");
                if (r == one)
                    o.require(s.value() <= g.num_endpoints(), name + ": alpha_1 > n");
            }
    });

    criterion(8, "branch-and-bound equals enumeration on every instance with <= 12 candidates", 0, [&](Outcome& o) {
        int instances = 0;
        for (int n = 1; n <= 4; ++n)
            for (const ContinuousGraph& g : oracle::all_graphs(n))
                for (std::int64_t d : {1, 2, 3, 4}) {
                    Grid grid(g, d);
                    if (grid.size() > 12)
                        continue;
                    std::vector<Point> pts(grid.points().begin(), grid.points().end());
                    for (const Rational& r : {Rational(1, 4), Rational(1, 3), Rational(1, 2), one, Rational(3, 2)}) {
                        ++instances;
                        o.require(max_packing_grid_exact(g, r, d).value() == oracle::max_packing(g, r, pts), "packing mismatch");
                        CoverSolution c = min_cover_grid_exact(g, r, d);
                        int expect = oracle::min_cover(g, r, pts);
                        o.require(expect < 0 ? c.status == SearchStatus::infeasible : c.value() == expect, "cover mismatch");
                    }
                    if (g.num_edges() == 0)
                        continue;
                    std::mt19937 rng(static_cast<unsigned>(instances));
                    auto pool = grid_aligned_subtrees(g, d, 1);
                    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                    for (int t = 0; t < 10; ++t) {
                        std::vector<Subtree> fam;
                        for (int k = 0; k <= t % 4; ++k)
                            fam.push_back(pool[pick(rng)]);
                        ++instances;
                        o.require(bramble_order(g, fam, d).order == oracle::min_hitting_set(g, fam, pts), "hitting-set mismatch");
                    }
                }
        o.note << instances << " instances";
    });

    criterion(9, "symmetry, triangle inequality, zero self-distance on D=6 grids, n <= 5", 0, [&](Outcome& o) {
        std::vector<ContinuousGraph> graphs;
        for (int n = 1; n <= 4; ++n)
            for (auto& g : oracle::all_graphs(n))
                graphs.push_back(std::move(g));
        for (const char* f : {"path", "cycle", "complete", "star"})
            graphs.push_back(generate(f, 5));
        long pairs = 0;
        for (const ContinuousGraph& g : graphs) {
            Grid grid(g, 6);
            const int k = grid.size();
            std::vector<std::vector<Distance>> d(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    d[i].push_back(point_distance(g, grid.point(i), grid.point(j)));
            for (int i = 0; i < k; ++i) {
                o.require(d[i][i] == Distance(Rational(0)), "non-zero self distance");
                for (int j = 0; j < k; ++j) {
                    ++pairs;
                    o.require(d[i][j] == d[j][i], "asymmetric distance");
                    for (int m = 0; m < k; ++m)
                        if (d[i][m].is_finite() && d[m][j].is_finite())
                            o.require(d[i][j] <= Distance(d[i][m].value() + d[m][j].value()), "triangle inequality violated");
                }
            }
        }
        o.note << pairs << " ordered pairs over " << graphs.size() << " graphs";
    });

    criterion(10, "C3 vertex singletons form a 1-bramble of order 3; tw(C3)=2, tw(K4)=3", 10, [&](Outcome& o) {
        ContinuousGraph c3 = generate("cycle", 3);
        std::vector<Subtree> singles{Subtree(c3, {}, {0}), Subtree(c3, {}, {1}), Subtree(c3, {}, {2})};
        o.require(is_r_bramble(c3, one, singles), "singletons are not a 1-bramble");
        o.require(bramble_order(c3, singles, 2).order == 3, "order != 3");
        o.require(treewidth_exact(CombinatorialGraph(c3)) == 2, "tw(C3) != 2");
        o.require(treewidth_exact(CombinatorialGraph(generate("complete", 4))) == 3, "tw(K4) != 3");
        BrambleCaps wide;
        wide.max_subtrees = 6;
        ExperimentReport rep = run_bramble_report({{"P2", generate("path", 2)}, {"P3", generate("path", 3)}, {"C3", c3},
                                                   {"K4", generate("complete", 4)}},
                                                  2, wide);
        std::cout << rep.to_text();
    });

    criterion(11, "planar candidate at D=4, budget 2m=36, up to 3 colours", 600, [&](Outcome& o) {
        PlanarExperiment exp = planar_candidate_experiment(4, 0);
        bool settled = exp.search.upper_bound.has_value() || exp.search.lower_bound > 3;
        o.require(settled, "search did not finish: " + exp.outcome);
        if (exp.search.witness)
            o.require(verify_coloring(exp.graph, *exp.search.witness), "witness fails verification");
        o.note << "outcome: " << exp.outcome << " (attempts:";
        for (const std::string& a : exp.search.attempts)
            o.note << ' ' << a;
        o.note << ")";
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
