#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contgraph/bitset.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/packing.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"
#include "contgraph/search.hpp"

namespace contgraph {

struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, disjoint, closed subintervals of [0,1] on one edge.
struct EdgeIntervalSet {
    int edge = 0;
    std::vector<Interval> intervals;
};

/// Offsets t in [0,1] of `edge` with d(center, t) <= r, as merged closed intervals.
EdgeIntervalSet ball_trace_on_edge(const ContinuousGraph& g, const Point& center, const Rational& r, int edge);

/// Part of an edge no ball reaches. Bounds are open unless flagged closed.
struct CoverageGap {
    int edge = 0;
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;

    std::string str() const;
};

std::optional<CoverageGap> find_coverage_gap(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& centers);
bool verify_cover(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& centers);

/// Finite stand-in for the edge set: every trace breakpoint plus one point
/// strictly between consecutive breakpoints. A ball set covers all edges iff
/// it covers every element, because each open piece between breakpoints is
/// either inside or disjoint from every trace.
struct CoverUniverse {
    struct Element {
        int edge;
        Rational offset;
    };
    std::vector<Element> elements;
    std::vector<Bitset> element_candidates;  // candidates covering each element
};

CoverUniverse cover_universe(const ContinuousGraph& g, const Rational& r, std::span<const Point> candidates);

struct CoverSolution {
    Rational radius;
    std::vector<Point> centers;
    CertificateKind kind = CertificateKind::construction;
    std::int64_t grid_denominator = 0;
    SearchStatus status = SearchStatus::optimal;
    int lower_bound = 0;  // proven bound on the grid optimum

    int value() const { return static_cast<int>(centers.size()); }
};

CoverSolution min_cover_grid_exact(const ContinuousGraph& g, const Rational& r, std::int64_t denominator,
                                   const SearchOptions& options = {});

struct MatchingCoverResult {
    CoverSolution solution;
    bool covers = false;
    std::optional<CoverageGap> gap;  // first uncovered piece when it does not cover
};

/// Radius-1 balls at the midpoints of a maximum matching.
MatchingCoverResult matching_midpoint_cover(const ContinuousGraph& g);

struct DualityReport {
    int alpha1 = 0;
    int beta1 = 0;
    int n = 0;
    bool holds = false;
    bool alpha_stable = false;
    bool beta_stable = false;
    bool exact = true;  // both searches finished within the node cap
    std::int64_t denominator = 0;
    int levels = 0;
};

/// Grid-exact alpha_1 and beta_1 at D, with refinement checks on D, 2D, ..., 2^levels D.
DualityReport duality_report(const ContinuousGraph& g, std::int64_t denominator, int levels = 1, const SearchOptions& options = {});

}  // namespace contgraph
