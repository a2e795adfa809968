#include "contgraph/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "contgraph/baselines.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/metric.hpp"

namespace contgraph {

namespace {

void merge_into(std::vector<Interval>& intervals)
{
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (Interval& iv : intervals) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = max(merged.back().hi, iv.hi);
        else
            merged.push_back(std::move(iv));
    }
    intervals = std::move(merged);
}

bool contains(const std::vector<Interval>& intervals, const Rational& t)
{
    for (const Interval& iv : intervals)
        if (iv.lo <= t && t <= iv.hi)
            return true;
    return false;
}

}  // namespace

EdgeIntervalSet ball_trace_on_edge(const ContinuousGraph& g, const Point& center, const Rational& r, int edge)
{
    if (r.sign() <= 0)
        throw InvalidInput("ball radius must be positive");
    if (!g.valid_edge(edge))
        throw InvalidInput("edge index " + std::to_string(edge) + " out of range");
    const Edge& e = g.edge(edge);
    const Rational zero(0), one(1);
    EdgeIntervalSet out;
    out.edge = edge;

    Distance du = point_distance(g, center, Point::endpoint(e.u));
    if (du.is_finite() && du.value() <= r)
        out.intervals.push_back({zero, min(one, r - du.value())});
    Distance dv = point_distance(g, center, Point::endpoint(e.v));
    if (dv.is_finite() && dv.value() <= r)
        out.intervals.push_back({max(zero, one - (r - dv.value())), one});
    if (!center.is_endpoint() && center.edge_index() == edge)
        out.intervals.push_back({max(zero, center.offset() - r), min(one, center.offset() + r)});

    merge_into(out.intervals);
    return out;
}

std::string CoverageGap::str() const
{
    return "edge " + std::to_string(edge) + " " + (lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

std::optional<CoverageGap> find_coverage_gap(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& centers)
{
    for (const Point& c : centers)
        validate_point(g, c);
    const Rational zero(0), one(1);
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<Interval> all;
        for (const Point& c : centers) {
            auto trace = ball_trace_on_edge(g, c, r, e);
            all.insert(all.end(), trace.intervals.begin(), trace.intervals.end());
        }
        merge_into(all);
        if (all.empty())
            return CoverageGap{e, zero, one, true, true};
        if (all.front().lo > zero)
            return CoverageGap{e, zero, all.front().lo, true, false};
        for (std::size_t i = 1; i < all.size(); ++i)
            return CoverageGap{e, all[i - 1].hi, all[i].lo, false, false};
        if (all.front().hi < one)
            return CoverageGap{e, all.front().hi, one, false, true};
    }
    return std::nullopt;
}

bool verify_cover(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& centers)
{
    return !find_coverage_gap(g, r, centers).has_value();
}

CoverUniverse cover_universe(const ContinuousGraph& g, const Rational& r, std::span<const Point> candidates)
{
    const int num_candidates = static_cast<int>(candidates.size());
    CoverUniverse u;
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<std::vector<Interval>> traces;
        traces.reserve(candidates.size());
        std::vector<Rational> breaks{Rational(0), Rational(1)};
        for (const Point& c : candidates) {
            traces.push_back(ball_trace_on_edge(g, c, r, e).intervals);
            for (const Interval& iv : traces.back()) {
                breaks.push_back(iv.lo);
                breaks.push_back(iv.hi);
            }
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

        std::vector<Rational> samples;
        for (std::size_t i = 0; i < breaks.size(); ++i) {
            samples.push_back(breaks[i]);
            if (i + 1 < breaks.size())
                samples.push_back((breaks[i] + breaks[i + 1]) / Rational(2));
        }
        for (Rational& t : samples) {
            Bitset covering(num_candidates);
            for (int c = 0; c < num_candidates; ++c)
                if (contains(traces[static_cast<std::size_t>(c)], t))
                    covering.set(c);
            u.elements.push_back({e, std::move(t)});
            u.element_candidates.push_back(std::move(covering));
        }
    }
    return u;
}

CoverSolution min_cover_grid_exact(const ContinuousGraph& g, const Rational& r, std::int64_t denominator, const SearchOptions& options)
{
    if (r.sign() <= 0)
        throw InvalidInput("radius must be positive, got " + r.str());
    Grid grid(g, denominator);
    CoverUniverse universe = cover_universe(g, r, grid.points());
    SetCoverResult sc = min_set_cover(grid.size(), universe.element_candidates, options);

    CoverSolution sol;
    sol.radius = r;
    sol.grid_denominator = denominator;
    sol.status = sc.status;
    sol.lower_bound = sc.lower_bound;
    if (sc.status == SearchStatus::infeasible) {
        sol.kind = CertificateKind::bound;
        return sol;
    }
    sol.kind = sc.status == SearchStatus::optimal ? CertificateKind::grid_certified : CertificateKind::bound;
    for (int c : sc.chosen)
        sol.centers.push_back(grid.point(c));
    if (!verify_cover(g, r, sol.centers))
        throw std::logic_error("grid cover failed exact verification");
    return sol;
}

MatchingCoverResult matching_midpoint_cover(const ContinuousGraph& g)
{
    MatchingCoverResult out;
    out.solution.radius = Rational(1);
    out.solution.kind = CertificateKind::construction;
    for (const Edge& m : max_matching(CombinatorialGraph(g)))
        out.solution.centers.push_back(Point::on_edge(g, *g.find_edge(m.u, m.v), Rational(1, 2)));
    std::sort(out.solution.centers.begin(), out.solution.centers.end());
    out.gap = find_coverage_gap(g, out.solution.radius, out.solution.centers);
    out.covers = !out.gap.has_value();
    out.solution.lower_bound = 0;
    return out;
}

DualityReport duality_report(const ContinuousGraph& g, std::int64_t denominator, int levels, const SearchOptions& options)
{
    if (levels < 1)
        throw InvalidInput("refinement needs at least one level");
    const Rational one(1);
    DualityReport rep;
    rep.n = g.num_endpoints();
    rep.denominator = denominator;
    rep.levels = levels;

    GridSolver alpha = [&](const ContinuousGraph& graph, const Rational& r, std::int64_t d) {
        PackingSolution s = max_packing_grid_exact(graph, r, d, options);
        if (s.status != SearchStatus::optimal)
            rep.exact = false;
        return static_cast<std::int64_t>(s.value());
    };
    GridSolver beta = [&](const ContinuousGraph& graph, const Rational& r, std::int64_t d) {
        CoverSolution s = min_cover_grid_exact(graph, r, d, options);
        if (s.status != SearchStatus::optimal)
            rep.exact = false;
        return static_cast<std::int64_t>(s.value());
    };
    rep.alpha1 = static_cast<int>(alpha(g, one, denominator));
    rep.beta1 = static_cast<int>(beta(g, one, denominator));
    rep.alpha_stable = refinement_stable(g, one, alpha, denominator, levels);
    rep.beta_stable = refinement_stable(g, one, beta, denominator, levels);
    rep.holds = rep.exact && rep.alpha1 + rep.beta1 == rep.n;
    return rep;
}

}  // namespace contgraph
