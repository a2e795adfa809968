#pragma once

#include <vector>

#include "contgraph/graph.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"

namespace contgraph {

/// Shortest-path distances between endpoints; row-major n x n.
std::vector<std::vector<Distance>> endpoint_apsp(const ContinuousGraph& g);

/// Shortest-path distance between two points of `g`.
Distance point_distance(const ContinuousGraph& g, const Point& p, const Point& q);

struct Components {
    /// component id per endpoint
    std::vector<int> of_endpoint;
    /// component id per edge
    std::vector<int> of_edge;
    int count = 0;
};

Components components(const ContinuousGraph& g);

enum class DiameterScope {
    /// largest diameter among the connected components
    per_component,
    /// infinite as soon as there are two or more components
    global,
};

/// Exact supremum of point distances. With unit edges the pairwise distance
/// restricted to two edges is a minimum of affine functions of the two
/// offsets whose breakpoints lie on multiples of 1/4, so the supremum is
/// attained on the denominator-4 grid and found by enumerating it.
Distance diameter(const ContinuousGraph& g, DiameterScope scope = DiameterScope::per_component);

/// Closed-ball membership: d(center, p) <= r.
bool ball_covers_point(const ContinuousGraph& g, const Point& center, const Rational& r, const Point& p);

}  // namespace contgraph
