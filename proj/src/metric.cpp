#include "contgraph/metric.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "contgraph/grid.hpp"
#include "contgraph/kernels.hpp"

namespace contgraph {

namespace {

struct Anchor {
    int endpoint;
    Rational cost;
};

std::vector<Anchor> anchors_of(const ContinuousGraph& g, const Point& p)
{
    if (p.is_endpoint())
        return {{p.endpoint_id(), Rational(0)}};
    const Edge& e = g.edge(p.edge_index());
    return {{e.u, p.offset()}, {e.v, Rational(1) - p.offset()}};
}

int find_root(std::vector<int>& parent, int x)
{
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

std::vector<std::vector<Distance>> endpoint_apsp(const ContinuousGraph& g)
{
    const int n = g.num_endpoints();
    std::vector<std::vector<Distance>> out(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        out[static_cast<std::size_t>(u)].reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            int h = g.hops(u, v);
            out[static_cast<std::size_t>(u)].push_back(h == ContinuousGraph::unreachable ? Distance::infinite() : Distance(Rational(h)));
        }
    }
    return out;
}

Distance point_distance(const ContinuousGraph& g, const Point& p, const Point& q)
{
    validate_point(g, p);
    validate_point(g, q);
    std::optional<Rational> best;
    if (!p.is_endpoint() && !q.is_endpoint() && p.edge_index() == q.edge_index())
        best = abs(p.offset() - q.offset());
    for (const Anchor& a : anchors_of(g, p)) {
        for (const Anchor& b : anchors_of(g, q)) {
            int h = g.hops(a.endpoint, b.endpoint);
            if (h == ContinuousGraph::unreachable)
                continue;
            Rational d = a.cost + Rational(h) + b.cost;
            if (!best || d < *best)
                best = std::move(d);
        }
    }
    if (!best)
        return Distance::infinite();
    return Distance(*best);
}

Components components(const ContinuousGraph& g)
{
    const int n = g.num_endpoints();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : g.edges()) {
        int a = find_root(parent, e.u);
        int b = find_root(parent, e.v);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    Components c;
    c.of_endpoint.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int root = find_root(parent, v);
        if (label[static_cast<std::size_t>(root)] < 0)
            label[static_cast<std::size_t>(root)] = c.count++;
        c.of_endpoint[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(root)];
    }
    for (const Edge& e : g.edges())
        c.of_edge.push_back(c.of_endpoint[static_cast<std::size_t>(e.u)]);
    return c;
}

Distance diameter(const ContinuousGraph& g, DiameterScope scope)
{
    if (scope == DiameterScope::global && components(g).count > 1)
        return Distance::infinite();
    if (g.num_endpoints() == 0)
        return Distance(Rational(0));
    Grid grid(g, 4);
    kernels::DistanceTable table = kernels::grid_distances_parallel(g, grid);
    std::int64_t best = 0;
    for (int i = 0; i < table.size(); ++i)
        for (int j = 0; j < table.size(); ++j)
            if (table.at(i, j) != kernels::unreachable)
                best = std::max(best, table.at(i, j));
    return Distance(Rational(best, 4));
}

bool ball_covers_point(const ContinuousGraph& g, const Point& center, const Rational& r, const Point& p)
{
    if (r.sign() <= 0)
        throw InvalidInput("ball radius must be positive");
    Distance d = point_distance(g, center, p);
    return d.is_finite() && d.value() <= r;
}

}  // namespace contgraph
