#include "contgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace contgraph {

ContinuousGraph::ContinuousGraph(int num_endpoints, std::vector<Edge> edges)
    : n_(num_endpoints), edges_(std::move(edges))
{
    if (n_ < 0)
        throw InvalidInput("negative endpoint count");
    incident_.assign(static_cast<std::size_t>(n_), {});
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < num_edges(); ++e) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        if (!valid_endpoint(edge.u) || !valid_endpoint(edge.v))
            throw InvalidInput("edge " + std::to_string(e) + " references an endpoint outside 0.." + std::to_string(n_ - 1));
        if (edge.u == edge.v)
            throw InvalidInput("edge " + std::to_string(e) + " is a self-loop");
        if (!seen.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second)
            throw InvalidInput("edge " + std::to_string(e) + " duplicates an earlier edge");
        incident_[static_cast<std::size_t>(edge.u)].push_back(e);
        incident_[static_cast<std::size_t>(edge.v)].push_back(e);
    }

    // unit edges: BFS from every endpoint
    hops_.assign(static_cast<std::size_t>(n_) * n_, unreachable);
    for (int s = 0; s < n_; ++s) {
        int* row = &hops_[static_cast<std::size_t>(s) * n_];
        row[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int e : incident_[static_cast<std::size_t>(x)]) {
                const Edge& edge = edges_[static_cast<std::size_t>(e)];
                int y = edge.u == x ? edge.v : edge.u;
                if (row[y] == unreachable) {
                    row[y] = row[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
}

int ContinuousGraph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::optional<int> ContinuousGraph::find_edge(int u, int v) const
{
    if (!valid_endpoint(u) || !valid_endpoint(v))
        return std::nullopt;
    for (int e : incident(u)) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        if ((edge.u == u && edge.v == v) || (edge.u == v && edge.v == u))
            return e;
    }
    return std::nullopt;
}

namespace {

void require(bool ok, std::string_view family, int n, std::string_view what)
{
    if (!ok)
        throw InvalidInput(std::string(family) + " family needs " + std::string(what) + ", got n=" + std::to_string(n));
}

}  // namespace

ContinuousGraph generate(std::string_view family, int n)
{
    std::vector<Edge> edges;
    if (family == "complete") {
        require(n >= 1, family, n, "n >= 1");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return {n, std::move(edges)};
    }
    if (family == "path") {
        require(n >= 1, family, n, "n >= 1");
        for (int u = 0; u + 1 < n; ++u)
            edges.push_back({u, u + 1});
        return {n, std::move(edges)};
    }
    if (family == "cycle") {
        require(n >= 3, family, n, "n >= 3");
        for (int u = 0; u + 1 < n; ++u)
            edges.push_back({u, u + 1});
        edges.push_back({0, n - 1});
        return {n, std::move(edges)};
    }
    if (family == "star") {
        require(n >= 1, family, n, "n >= 1");
        for (int leaf = 1; leaf < n; ++leaf)
            edges.push_back({0, leaf});
        return {n, std::move(edges)};
    }
    if (family == "empty") {
        require(n >= 0, family, n, "n >= 0");
        return {n, {}};
    }
    if (family == "envelope") {
        // square 0-1-2-3 (0,1 on top), diagonal crossing 4, roof apex 5 over the top side
        edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}};
        return {6, std::move(edges)};
    }
    if (family == "planar8") {
        // K4 on 0..3; its four triangular faces are the four vertex triples,
        // face endpoint 4+i sits in the face opposite vertex i
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                edges.push_back({u, v});
        for (int i = 0; i < 4; ++i)
            for (int v = 0; v < 4; ++v)
                if (v != i)
                    edges.push_back({v, 4 + i});
        return {8, std::move(edges)};
    }
    throw InvalidInput("unsupported graph family '" + std::string(family) + "'");
}

std::vector<std::string> family_names()
{
    return {"complete", "path", "cycle", "star", "empty", "envelope", "planar8"};
}

}  // namespace contgraph
