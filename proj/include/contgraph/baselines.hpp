#pragma once

#include <stdexcept>
#include <vector>

#include "contgraph/bitset.hpp"
#include "contgraph/graph.hpp"

namespace contgraph {

/// Raised when an exact solver is asked to handle an instance above its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph G(Γ): endpoints become vertices, unit edges become edges.
class CombinatorialGraph {
public:
    explicit CombinatorialGraph(int n);
    explicit CombinatorialGraph(const ContinuousGraph& g);

    int size() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const Bitset& neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    std::vector<Edge> edges() const;

private:
    int n_;
    std::vector<Bitset> rows_;
};

inline constexpr int default_baseline_cap = 20;

std::vector<int> max_independent_vertices(const CombinatorialGraph& g, int cap = default_baseline_cap);
int alpha_exact(const CombinatorialGraph& g, int cap = default_baseline_cap);

/// Minimum vertex cover via set cover over the edges, independent of the
/// independent-set search; beta_exact checks alpha + beta = n.
std::vector<int> min_vertex_cover(const CombinatorialGraph& g, int cap = default_baseline_cap);
int beta_exact(const CombinatorialGraph& g, int cap = default_baseline_cap);

/// Smallest c admitting a proper c-colouring (DSATUR backtracking per c).
int chi_exact(const CombinatorialGraph& g, int cap = default_baseline_cap);

/// Whether a proper colouring with `colours` colours exists; fills `assignment` (1-based) when it does.
bool colourable(const std::vector<Bitset>& adjacency, int colours, std::vector<int>* assignment = nullptr);

/// Maximum matching (Edmonds' blossom algorithm). Edges come out with u < v, sorted.
std::vector<Edge> max_matching(const CombinatorialGraph& g);

/// Largest order of a bramble: connected vertex sets that pairwise share a
/// vertex or are joined by an edge, order being the minimum hitting set.
/// Order only grows when sets are added, so maximal touching families suffice.
int bramble_number_exact(const CombinatorialGraph& g, int cap = 7);

/// Exact treewidth by dynamic programming over elimination-order prefixes.
int treewidth_exact(const CombinatorialGraph& g, int cap = 10);

}  // namespace contgraph
