#pragma once

#include <compare>
#include <string>

#include "contgraph/graph.hpp"
#include "contgraph/rational.hpp"

namespace contgraph {

/// A location in a continuous graph: an endpoint, or an interior point of an
/// edge at offset 0 < t < 1 from the edge's first endpoint.
///
/// Offsets 0 and 1 are folded into the matching endpoint, so two points
/// compare equal iff they are the same location.
class Point {
public:
    static Point endpoint(int id);

    /// Canonicalizing constructor; throws InvalidInput for a bad edge or t outside [0,1].
    static Point on_edge(const ContinuousGraph& g, int edge, const Rational& offset);

    bool is_endpoint() const { return edge_ < 0; }
    int endpoint_id() const { return id_; }
    int edge_index() const { return edge_; }
    const Rational& offset() const { return offset_; }

    /// `v <id>` or `e <edge> <num>/<den>`.
    std::string literal() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

private:
    Point() = default;

    int edge_ = -1;
    int id_ = 0;
    Rational offset_;
};

/// Throws InvalidInput unless `p` names a location of `g`.
void validate_point(const ContinuousGraph& g, const Point& p);

/// Non-negative rational distance, or infinity between components.
class Distance {
public:
    static Distance infinite() { return Distance(); }
    Distance(Rational value);  // NOLINT(google-explicit-constructor)

    bool is_finite() const { return finite_; }
    const Rational& value() const;

    std::string str() const { return finite_ ? value_.str() : "inf"; }

    friend bool operator==(const Distance&, const Distance&) = default;
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);

private:
    Distance() = default;

    bool finite_ = false;
    Rational value_;
};

}  // namespace contgraph
