#include "contgraph/packing.hpp"

#include <algorithm>
#include <stdexcept>

#include "contgraph/baselines.hpp"
#include "contgraph/kernels.hpp"
#include "contgraph/metric.hpp"

namespace contgraph {

std::string to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::grid_certified:
        return "grid-certified";
    case CertificateKind::construction:
        return "construction";
    case CertificateKind::bound:
        return "bound";
    }
    return "?";
}

CertificateKind parse_certificate_kind(const std::string& s)
{
    if (s == "grid-certified")
        return CertificateKind::grid_certified;
    if (s == "construction")
        return CertificateKind::construction;
    if (s == "bound")
        return CertificateKind::bound;
    throw InvalidInput("unknown certificate kind '" + s + "'");
}

namespace {

void require_positive(const Rational& r)
{
    if (r.sign() <= 0)
        throw InvalidInput("radius must be positive, got " + r.str());
}

}  // namespace

std::optional<PackingViolation> find_packing_violation(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& points)
{
    for (const Point& p : points)
        validate_point(g, p);
    const Rational two_r = Rational(2) * r;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Distance d = point_distance(g, points[i], points[j]);
            if (d < Distance(two_r))
                return PackingViolation{points[i], points[j], d};
        }
    }
    return std::nullopt;
}

bool verify_packing(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& points)
{
    return !find_packing_violation(g, r, points).has_value();
}

std::vector<Bitset> conflict_graph(const Grid& grid, const ContinuousGraph& g, const Rational& r)
{
    require_positive(r);
    kernels::DistanceTable table = kernels::grid_distances_parallel(g, grid);
    std::vector<std::uint8_t> flags = kernels::threshold_matrix_parallel(table, Rational(2) * r, true);
    const int size = grid.size();
    std::vector<Bitset> rows(static_cast<std::size_t>(size), Bitset(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (flags[static_cast<std::size_t>(i) * size + j])
                rows[static_cast<std::size_t>(i)].set(j);
    return rows;
}

PackingSolution max_packing_grid_exact(const ContinuousGraph& g, const Rational& r, std::int64_t denominator, const SearchOptions& options)
{
    require_positive(r);
    Grid grid(g, denominator);
    IndependentSetResult mis = max_independent_set(conflict_graph(grid, g, r), options);

    PackingSolution sol;
    sol.radius = r;
    sol.grid_denominator = denominator;
    sol.status = mis.status;
    sol.upper_bound = mis.upper_bound;
    sol.kind = mis.status == SearchStatus::optimal ? CertificateKind::grid_certified : CertificateKind::bound;
    for (int i : mis.members)
        sol.points.push_back(grid.point(i));
    if (!verify_packing(g, r, sol.points))
        throw std::logic_error("grid packing failed exact verification");
    if (r == Rational(1) && sol.value() > endpoint_bound_r1(g))
        throw std::logic_error("1-packing larger than the endpoint count");
    return sol;
}

PackingSolution greedy_edge_placement(const ContinuousGraph& g, const Rational& r)
{
    require_positive(r);
    if (r > Rational(1, 2))
        throw InvalidInput("greedy edge placement needs r <= 1/2, got " + r.str());
    const std::int64_t k = (Rational(1) / (Rational(2) * r)).floor_i64();
    PackingSolution sol;
    sol.radius = r;
    sol.kind = CertificateKind::construction;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        for (std::int64_t i = 0; i < k; ++i) {
            Rational from_low = r + Rational(i) * Rational(2) * r;
            Rational offset = edge.u < edge.v ? from_low : Rational(1) - from_low;
            sol.points.push_back(Point::on_edge(g, e, offset));
        }
    }
    std::sort(sol.points.begin(), sol.points.end());
    sol.upper_bound = sol.value();
    if (!verify_packing(g, r, sol.points))
        throw std::logic_error("greedy edge placement failed exact verification");
    return sol;
}

Rational trivial_upper_bound(const ContinuousGraph& g, const Rational& r)
{
    require_positive(r);
    return Rational(g.num_endpoints()) + Rational(g.num_edges()) / r;
}

int endpoint_bound_r1(const ContinuousGraph& g)
{
    return g.num_endpoints();
}

PackingSolution matching_midpoints(const ContinuousGraph& g)
{
    PackingSolution sol;
    sol.radius = Rational(1);
    sol.kind = CertificateKind::construction;
    for (const Edge& m : max_matching(CombinatorialGraph(g)))
        sol.points.push_back(Point::on_edge(g, *g.find_edge(m.u, m.v), Rational(1, 2)));
    std::sort(sol.points.begin(), sol.points.end());
    sol.upper_bound = sol.value();
    if (!verify_packing(g, sol.radius, sol.points))
        throw std::logic_error("matching midpoints failed exact verification");
    return sol;
}

}  // namespace contgraph
