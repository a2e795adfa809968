#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contgraph/covering.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"
#include "contgraph/search.hpp"

namespace contgraph {

struct ColoredBall {
    Point center;
    int color = 1;  // 1-based
};

/// Radius-1/2 cover with a colour per ball.
struct ColoredCover {
    Rational radius{1, 2};
    std::vector<ColoredBall> entries;

    int colors_used() const;
    std::vector<Point> centers() const;
};

/// Closed balls of radius r meet iff their centres are at most 2r apart:
/// the geodesic midpoint lies in both, and the triangle inequality rules out
/// a common point beyond 2r.
bool balls_intersect(const ContinuousGraph& g, const Point& p, const Point& q, const Rational& r);

struct ColoringViolation {
    std::string message;
};

std::optional<ColoringViolation> find_coloring_violation(const ContinuousGraph& g, const ColoredCover& cc);
bool verify_coloring(const ContinuousGraph& g, const ColoredCover& cc);

/// Constructive ceil(n/2)-colouring of the complete continuous graph on n >= 2 endpoints.
/// Even n: matching midpoints in distinct colours plus four balls per pair of
/// matched edges at 1/4 and 3/4 along the cross edges. Odd n: colour K_{n+1}
/// and keep what lies in K_n.
ColoredCover kn_half_coloring(int n);

/// One ball of radius 1/2 covers total length at most max(deg, 2)/2, and one
/// colour class is a family of pairwise disjoint closed balls, which cannot
/// cover a connected component with two or more balls. So a component longer
/// than one ball can cover needs two colours.
bool single_color_impossible(const ContinuousGraph& g);

struct ColoringSearchOptions {
    std::int64_t denominator = 4;
    int max_colors = 3;
    int center_budget = 0;  // 0: 2m
    SearchOptions search;
};

struct ColoringSearchResult {
    /// Smallest colour count found, when the search settled it within max_colors.
    std::optional<int> colors;
    /// Every c below this was exhausted (no c-colourable grid cover within budget).
    int lower_bound = 1;
    /// Best colour count with a verified witness, if any.
    std::optional<int> upper_bound;
    std::optional<ColoredCover> witness;
    /// Per tried c: "found", "exhausted" or "node-cap".
    std::vector<std::string> attempts;
    std::int64_t denominator = 4;
    int center_budget = 0;
    std::uint64_t nodes = 0;
};

/// Decide, for c = 1..max_colors, whether some cover by at most
/// `center_budget` grid-centred balls of radius 1/2 has a proper c-colouring.
ColoringSearchResult min_colors_exact(const ContinuousGraph& g, const ColoringSearchOptions& options);

/// Single-c feasibility: a c-coloured grid cover within the budget, if one exists.
struct ColorabilityResult {
    SearchStatus status = SearchStatus::infeasible;  // optimal = found
    std::optional<ColoredCover> witness;
    std::uint64_t nodes = 0;
};
ColorabilityResult find_colored_cover(const ContinuousGraph& g, int colors, const ColoringSearchOptions& options);

struct PlanarExperiment {
    ContinuousGraph graph;
    ColoringSearchResult search;
    std::string outcome;  // "2-colouring witness", "3-colouring witness", "exhausted", ...
};

PlanarExperiment planar_candidate_experiment(std::int64_t denominator, int center_budget, const SearchOptions& search = {});

}  // namespace contgraph
