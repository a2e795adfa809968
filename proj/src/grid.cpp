#include "contgraph/grid.hpp"

#include <algorithm>

namespace contgraph {

Grid::Grid(const ContinuousGraph& g, std::int64_t denominator)
    : denominator_(denominator), num_endpoints_(g.num_endpoints())
{
    if (denominator < 1)
        throw InvalidInput("grid denominator must be positive");
    std::size_t total = static_cast<std::size_t>(g.num_endpoints())
        + static_cast<std::size_t>(g.num_edges()) * static_cast<std::size_t>(denominator - 1);
    points_.reserve(total);
    sites_.reserve(total);
    for (int v = 0; v < g.num_endpoints(); ++v) {
        points_.push_back(Point::endpoint(v));
        sites_.push_back({-1, v, 0});
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        for (std::int64_t i = 1; i < denominator; ++i) {
            points_.push_back(Point::on_edge(g, e, Rational(i, denominator)));
            sites_.push_back({e, -1, i});
        }
    }
}

int Grid::index_of(const Point& p) const
{
    if (p.is_endpoint())
        return p.endpoint_id() < num_endpoints_ ? p.endpoint_id() : -1;
    Rational scaled = p.offset() * Rational(denominator_);
    if (!scaled.is_integer())
        return -1;
    std::int64_t step = scaled.numerator_i64();
    return num_endpoints_ + p.edge_index() * static_cast<int>(denominator_ - 1) + static_cast<int>(step - 1);
}

Grid build_grid(const ContinuousGraph& g, std::int64_t denominator)
{
    return Grid(g, denominator);
}

std::int64_t default_denominator(const Rational& r)
{
    if (r.sign() <= 0)
        throw InvalidInput("radius must be positive");
    return 2 * r.denominator_i64();
}

bool refinement_stable(const ContinuousGraph& g, const Rational& r, const GridSolver& solve, std::int64_t denominator, int levels)
{
    if (levels < 1)
        throw InvalidInput("refinement needs at least one level");
    std::int64_t base = solve(g, r, denominator);
    for (int level = 1; level <= levels; ++level) {
        denominator *= 2;
        if (solve(g, r, denominator) != base)
            return false;
    }
    return true;
}

}  // namespace contgraph
