#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contgraph/bitset.hpp"

namespace contgraph {

/// Node budget for every branch-and-bound search. Read from the
/// CONTGRAPH_NODE_CAP environment variable, 50 million when unset.
std::uint64_t default_node_cap();

struct SearchOptions {
    std::uint64_t node_cap = default_node_cap();
    /// 1 runs the serial search; 0 lets OpenMP choose the worker count.
    int threads = 0;
};

enum class SearchStatus {
    optimal,
    node_cap,    // incumbent plus a proven bound, not optimal
    infeasible,  // no solution exists
};

std::string to_string(SearchStatus s);

struct IndependentSetResult {
    std::vector<int> members;  // ascending
    int upper_bound = 0;
    SearchStatus status = SearchStatus::optimal;
    std::uint64_t nodes = 0;
};

/// Maximum independent set of the graph given by symmetric conflict rows.
///
/// Branch-and-bound as a maximum clique search in the complement: vertices
/// ordered by descending complement degree, greedy start, and a bound from a
/// greedy partition of the candidates into conflict cliques (each clique holds
/// at most one member). With several workers the root branches run in
/// parallel against a shared incumbent; the returned witness is the same one
/// the serial search returns.
IndependentSetResult max_independent_set(const std::vector<Bitset>& conflicts, const SearchOptions& options = {});

struct SetCoverResult {
    std::vector<int> chosen;  // ascending candidate ids
    int lower_bound = 0;
    SearchStatus status = SearchStatus::optimal;
    std::uint64_t nodes = 0;
};

/// Minimum number of candidates covering every element.
/// `element_candidates[e]` holds the candidates (0..num_candidates-1) covering element e.
///
/// Branches on the uncovered element with the fewest remaining candidates and
/// bounds with a greedy set of uncovered elements whose candidate sets are
/// pairwise disjoint. Dominated elements and candidates are dropped first.
SetCoverResult min_set_cover(int num_candidates, const std::vector<Bitset>& element_candidates, const SearchOptions& options = {});

}  // namespace contgraph
