#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "contgraph/graph.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"

namespace contgraph {

/// Integer position of a grid point: an endpoint, or step i of D on an edge.
struct GridSite {
    int edge = -1;      // -1 for an endpoint
    int endpoint = -1;  // endpoint id when edge == -1
    std::int64_t step = 0;
};

/// All endpoints plus the interior points i/D (0 < i < D) of every edge.
/// Ordered: endpoints by id, then edge by edge with ascending offset.
class Grid {
public:
    Grid(const ContinuousGraph& g, std::int64_t denominator);

    std::int64_t denominator() const { return denominator_; }
    int size() const { return static_cast<int>(points_.size()); }
    std::span<const Point> points() const { return points_; }
    const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const GridSite& site(int i) const { return sites_[static_cast<std::size_t>(i)]; }

    /// Index of `p` in this grid, or -1.
    int index_of(const Point& p) const;

private:
    std::int64_t denominator_;
    int num_endpoints_;
    std::vector<Point> points_;
    std::vector<GridSite> sites_;
};

Grid build_grid(const ContinuousGraph& g, std::int64_t denominator);

/// 2b for r = a/b.
std::int64_t default_denominator(const Rational& r);

/// Optimal value of some grid-restricted solver at the given denominator.
using GridSolver = std::function<std::int64_t(const ContinuousGraph&, const Rational&, std::int64_t)>;

/// True iff `solve` returns the same value for D, 2D, ..., 2^levels D.
bool refinement_stable(const ContinuousGraph& g, const Rational& r, const GridSolver& solve, std::int64_t denominator, int levels);

}  // namespace contgraph
