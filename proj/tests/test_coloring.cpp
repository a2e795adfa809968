#include "doctest.h"

#include "contgraph/baselines.hpp"
#include "contgraph/coloring.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/metric.hpp"
#include "oracles.hpp"

using namespace contgraph;

namespace {

Point at(const ContinuousGraph& g, int u, int v, const Rational& t)
{
    int e = *g.find_edge(u, v);
    return g.edge(e).u == u ? Point::on_edge(g, e, t) : Point::on_edge(g, e, Rational(1) - t);
}

// Two-colour layout on K4: matched edges 01 (colour 1) and 23 (colour 2) at
// their midpoints, plus four quarter-point balls on the cross edges.
ColoredCover k4_layout(const ContinuousGraph& k4)
{
    const Rational q1(1, 4), q3(3, 4), h(1, 2);
    ColoredCover cc;
    cc.entries = {{at(k4, 0, 1, h), 1}, {at(k4, 2, 3, h), 2}, {at(k4, 0, 2, q3), 1}, {at(k4, 1, 3, q3), 1},
                  {at(k4, 0, 3, q1), 2}, {at(k4, 1, 2, q1), 2}};
    return cc;
}

}  // namespace

TEST_CASE("ball intersection")
{
    ContinuousGraph k4 = generate("complete", 4);
    const Rational h(1, 2);
    Point p = at(k4, 0, 1, h), q = at(k4, 2, 3, h);
    CHECK(balls_intersect(k4, p, p, h));
    CHECK_FALSE(balls_intersect(k4, p, q, h));
    ContinuousGraph p2 = generate("path", 2);
    CHECK(balls_intersect(p2, Point::endpoint(0), Point::endpoint(1), h));
}

TEST_CASE("ball intersection agrees with a common grid point (oracle)")
{
    const Rational h(1, 2);
    for (int n = 1; n <= 4; ++n)
        for (const ContinuousGraph& g : oracle::all_graphs(n)) {
            if (g.num_edges() > 4)
                continue;
            Grid grid(g, 6);
            for (int i = 0; i < grid.size(); ++i)
                for (int j = i; j < grid.size(); ++j) {
                    const Point &p = grid.point(i), &q = grid.point(j);
                    bool common = false;
                    for (int x = 0; x < grid.size() && !common; ++x)
                        common = ball_covers_point(g, p, h, grid.point(x)) && ball_covers_point(g, q, h, grid.point(x));
                    // centres on the D=6 grid at distance <= 1 have their geodesic midpoint on the D=12 grid;
                    // a D=6 witness can be missing, never spurious
                    if (common)
                        REQUIRE(balls_intersect(g, p, q, h));
                    REQUIRE(balls_intersect(g, p, q, h) == balls_intersect(g, q, p, h));
                    if (balls_intersect(g, p, q, h)) {
                        Grid fine(g, 12);
                        bool mid = false;
                        for (int x = 0; x < fine.size() && !mid; ++x)
                            mid = ball_covers_point(g, p, h, fine.point(x)) && ball_covers_point(g, q, h, fine.point(x));
                        REQUIRE(mid);
                    }
                }
        }
}

TEST_CASE("colouring verification")
{
    ContinuousGraph k4 = generate("complete", 4);
    CHECK(verify_coloring(k4, k4_layout(k4)));
    ContinuousGraph p2 = generate("path", 2);
    ColoredCover one;
    one.entries = {{Point::on_edge(p2, 0, Rational(1, 2)), 1}};
    CHECK(verify_coloring(p2, one));
    ColoredCover clash;
    clash.entries = {{Point::on_edge(p2, 0, Rational(1, 4)), 1}, {Point::on_edge(p2, 0, Rational(3, 4)), 1}};
    CHECK_FALSE(verify_coloring(p2, clash));
    ColoredCover holes;
    holes.entries = {{Point::endpoint(0), 1}};
    auto v = find_coloring_violation(p2, holes);
    REQUIRE(v);
    CHECK(v->message.find("uncovered") != std::string::npos);
}

TEST_CASE("complete-graph colouring with ceil(n/2) colours")
{
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        ColoredCover cc = kn_half_coloring(n);
        ContinuousGraph g = generate("complete", n);
        REQUIRE(verify_coloring(g, cc));
        REQUIRE(cc.colors_used() == (n + 1) / 2);
        if (n == 6) {
            // same-coloured centres sit strictly beyond 2r
            for (const auto& a : cc.entries)
                for (const auto& b : cc.entries)
                    if (&a != &b && a.color == b.color)
                        REQUIRE(point_distance(g, a.center, b.center) > Distance(Rational(1)));
        }
    }
}

TEST_CASE("one colour is impossible once a component outgrows one ball")
{
    CHECK(single_color_impossible(generate("complete", 4)));
    CHECK(single_color_impossible(generate("cycle", 4)));
    CHECK_FALSE(single_color_impossible(generate("path", 2)));
    CHECK(single_color_impossible(generate("star", 4)));
    CHECK_FALSE(single_color_impossible(ContinuousGraph(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(single_color_impossible(generate("empty", 3)));
}

TEST_CASE("grid colouring search examples")
{
    ColoringSearchOptions o;
    auto p2 = min_colors_exact(generate("path", 2), o);
    REQUIRE(p2.colors);
    CHECK(*p2.colors == 1);
    auto k4 = min_colors_exact(generate("complete", 4), o);
    REQUIRE(k4.colors);
    CHECK(*k4.colors == 2);
    REQUIRE(k4.witness);
    CHECK(verify_coloring(generate("complete", 4), *k4.witness));
    auto c4 = min_colors_exact(generate("cycle", 4), o);
    REQUIRE(c4.colors);
    CHECK(*c4.colors == 2);
}

TEST_CASE("grid colouring never exceeds the constructive count on complete graphs")
{
    ColoringSearchOptions o;
    for (int n = 2; n <= 6; ++n) {
        auto res = min_colors_exact(generate("complete", n), o);
        REQUIRE(res.upper_bound);
        REQUIRE(*res.upper_bound <= (n + 1) / 2);
        REQUIRE(verify_coloring(generate("complete", n), *res.witness));
    }
}

TEST_CASE("endpoint-centred covers bound the search by the chromatic number")
{
    // balls at all endpoints cover every edge at r = 1/2, and two of them meet
    // exactly when the endpoints are adjacent, so any proper colouring of G works
    for (int n = 2; n <= 4; ++n)
        for (const ContinuousGraph& g : oracle::all_graphs(n)) {
            if (g.num_edges() == 0)
                continue;
            ColoringSearchOptions o;
            o.max_colors = 4;
            o.center_budget = g.num_endpoints() + 2 * g.num_edges();
            auto res = min_colors_exact(g, o);
            REQUIRE(res.upper_bound);
            REQUIRE(*res.upper_bound <= chi_exact(CombinatorialGraph(g)));
        }
}

TEST_CASE("colourability equals enumeration on <= 12 candidates (oracle)")
{
    int checked = 0;
    for (int n = 2; n <= 4; ++n)
        for (const ContinuousGraph& g : oracle::all_graphs(n)) {
            if (g.num_edges() == 0 || Grid(g, 4).size() > 12)
                continue;
            Grid grid(g, 4);
            std::vector<Point> pts(grid.points().begin(), grid.points().end());
            for (int c = 1; c <= 3; ++c)
                for (int budget : {2, 3, 2 * g.num_edges()}) {
                    ColoringSearchOptions o;
                    o.center_budget = budget;
                    auto res = find_colored_cover(g, c, o);
                    bool expect = oracle::colored_cover_exists(g, pts, c, budget);
                    CAPTURE(g.num_edges());
                    CAPTURE(c);
                    CAPTURE(budget);
                    REQUIRE((res.status == SearchStatus::optimal) == expect);
                    if (res.witness) {
                        REQUIRE(verify_coloring(g, *res.witness));
                        REQUIRE(res.witness->colors_used() <= c);
                        REQUIRE(static_cast<int>(res.witness->entries.size()) <= budget);
                    }
                    ++checked;
                }
        }
    CHECK(checked > 20);
}

TEST_CASE("colouring witness does not depend on the worker count")
{
    for (const char* f : {"complete", "cycle"}) {
        ContinuousGraph g = generate(f, 5);
        ColoringSearchOptions a, b;
        a.search.threads = 1;
        b.search.threads = 4;
        auto x = min_colors_exact(g, a), y = min_colors_exact(g, b);
        REQUIRE(x.colors == y.colors);
        REQUIRE(x.witness.has_value() == y.witness.has_value());
        if (x.witness)
            for (std::size_t i = 0; i < x.witness->entries.size(); ++i) {
                REQUIRE(x.witness->entries[i].center == y.witness->entries[i].center);
                REQUIRE(x.witness->entries[i].color == y.witness->entries[i].color);
            }
    }
}

TEST_CASE("planar candidate experiment")
{
    PlanarExperiment exp = planar_candidate_experiment(4, 0);
    CHECK(exp.graph.num_endpoints() == 8);
    CHECK_FALSE(exp.outcome.empty());
    if (exp.search.witness)
        CHECK(verify_coloring(exp.graph, *exp.search.witness));
    // the K4 inside is two-colourable on its own
    ContinuousGraph k4 = generate("complete", 4);
    auto inner = min_colors_exact(k4, ColoringSearchOptions{});
    CHECK(inner.colors == 2);
}
