#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contgraph/bitset.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"
#include "contgraph/search.hpp"

namespace contgraph {

enum class CertificateKind {
    grid_certified,  // optimal among grid points of the stated denominator
    construction,    // explicit construction, verified
    bound,           // best incumbent of a capped search; see the bound field
};

std::string to_string(CertificateKind k);
CertificateKind parse_certificate_kind(const std::string& s);

/// Set of points pairwise at distance >= 2r.
struct PackingSolution {
    Rational radius;
    std::vector<Point> points;
    CertificateKind kind = CertificateKind::construction;
    std::int64_t grid_denominator = 0;  // 0 when not grid based
    SearchStatus status = SearchStatus::optimal;
    int upper_bound = 0;  // proven bound on the grid optimum

    int value() const { return static_cast<int>(points.size()); }
};

struct PackingViolation {
    Point first;
    Point second;
    Distance distance;
};

/// First pair (in input order) closer than 2r, if any. Throws InvalidInput for invalid points.
std::optional<PackingViolation> find_packing_violation(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& points);
bool verify_packing(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& points);

/// Conflict rows over grid points: i and j conflict iff d(i,j) < 2r.
std::vector<Bitset> conflict_graph(const Grid& grid, const ContinuousGraph& g, const Rational& r);

PackingSolution max_packing_grid_exact(const ContinuousGraph& g, const Rational& r, std::int64_t denominator,
                                       const SearchOptions& options = {});

/// floor(1/(2r)) points per edge at offsets r, 3r, 5r, ... from the lower-numbered endpoint.
PackingSolution greedy_edge_placement(const ContinuousGraph& g, const Rational& r);

/// n + m/r.
Rational trivial_upper_bound(const ContinuousGraph& g, const Rational& r);

/// A 1-packing never has more points than there are endpoints.
int endpoint_bound_r1(const ContinuousGraph& g);

/// Midpoints of a maximum matching; a 1-packing.
PackingSolution matching_midpoints(const ContinuousGraph& g);

}  // namespace contgraph
