#include "contgraph/point.hpp"

#include <stdexcept>

namespace contgraph {

Point Point::endpoint(int id)
{
    Point p;
    p.id_ = id;
    return p;
}

Point Point::on_edge(const ContinuousGraph& g, int edge, const Rational& offset)
{
    if (!g.valid_edge(edge))
        throw InvalidInput("edge index " + std::to_string(edge) + " out of range");
    if (offset < Rational(0) || offset > Rational(1))
        throw InvalidInput("edge offset " + offset.str() + " outside [0,1]");
    if (offset.is_zero())
        return endpoint(g.edge(edge).u);
    if (offset == Rational(1))
        return endpoint(g.edge(edge).v);
    Point p;
    p.edge_ = edge;
    p.offset_ = offset;
    return p;
}

std::string Point::literal() const
{
    if (is_endpoint())
        return "v " + std::to_string(id_);
    // always print the slash form so the literal parses back unambiguously
    std::string off = offset_.raw().get_num().get_str() + "/" + offset_.raw().get_den().get_str();
    return "e " + std::to_string(edge_) + " " + off;
}

std::strong_ordering operator<=>(const Point& a, const Point& b)
{
    // endpoints first, by id; then edge points by (edge, offset)
    if (a.is_endpoint() != b.is_endpoint())
        return a.is_endpoint() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_endpoint())
        return a.id_ <=> b.id_;
    if (auto c = a.edge_ <=> b.edge_; c != 0)
        return c;
    return a.offset_ <=> b.offset_;
}

void validate_point(const ContinuousGraph& g, const Point& p)
{
    if (p.is_endpoint()) {
        if (!g.valid_endpoint(p.endpoint_id()))
            throw InvalidInput("endpoint id " + std::to_string(p.endpoint_id()) + " out of range");
        return;
    }
    if (!g.valid_edge(p.edge_index()))
        throw InvalidInput("edge index " + std::to_string(p.edge_index()) + " out of range");
    if (p.offset() <= Rational(0) || p.offset() >= Rational(1))
        throw InvalidInput("edge point offset " + p.offset().str() + " is not strictly interior");
}

Distance::Distance(Rational value) : finite_(true), value_(std::move(value))
{
    if (value_.sign() < 0)
        throw std::invalid_argument("negative distance " + value_.str());
}

const Rational& Distance::value() const
{
    if (!finite_)
        throw std::logic_error("value() of an infinite distance");
    return value_;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b)
{
    if (!a.finite_ || !b.finite_) {
        if (a.finite_ == b.finite_)
            return std::strong_ordering::equal;
        return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
}

}  // namespace contgraph
