#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contgraph {

/// Raised for malformed graphs, points, radii and other bad caller input.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A unit-length continuous edge. Offsets on the edge are measured from `u`.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite set of endpoints joined by unit-length continuous edges.
///
/// Simple graph: no loops and no parallel edges. Isolated endpoints are fine.
/// Endpoint hop distances are computed once at construction; every graph is
/// immutable afterwards and safe to share between threads.
class ContinuousGraph {
public:
    static constexpr int unreachable = -1;

    ContinuousGraph() = default;
    ContinuousGraph(int num_endpoints, std::vector<Edge> edges);

    int num_endpoints() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
    std::span<const Edge> edges() const { return edges_; }

    /// Edge indices incident to endpoint `v`, ascending.
    std::span<const int> incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    std::optional<int> find_edge(int u, int v) const;
    bool adjacent(int u, int v) const { return find_edge(u, v).has_value(); }

    /// Number of unit edges on a shortest endpoint path, or `unreachable`.
    int hops(int u, int v) const { return hops_[static_cast<std::size_t>(u) * n_ + v]; }

    bool valid_endpoint(int v) const { return v >= 0 && v < n_; }
    bool valid_edge(int e) const { return e >= 0 && e < num_edges(); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> hops_;
};

/// Graph families used by the examples and reports.
/// complete/path/cycle/star/empty take the endpoint count; envelope and planar8 ignore it.
ContinuousGraph generate(std::string_view family, int n);

/// Names accepted by generate().
std::vector<std::string> family_names();

}  // namespace contgraph
