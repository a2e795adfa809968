#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contgraph/graph.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"
#include "contgraph/search.hpp"

namespace contgraph {

/// Closed piece [lo, hi] of one edge, offsets measured from the edge's first endpoint.
struct Segment {
    int edge = 0;
    Rational lo;
    Rational hi;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Union of closed edge segments and single endpoints.
///
/// Canonical form: segments on one edge are merged when they touch, a
/// degenerate segment at an edge end becomes that endpoint, and endpoints
/// already inside a segment are dropped.
class Subtree {
public:
    Subtree() = default;
    /// Throws InvalidInput for a bad edge, bad endpoint, or lo > hi outside [0,1].
    Subtree(const ContinuousGraph& g, std::vector<Segment> segments, std::vector<int> endpoints = {});

    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<int>& endpoints() const { return endpoints_; }
    bool empty() const { return segments_.empty() && endpoints_.empty(); }

    bool contains(const ContinuousGraph& g, const Point& p) const;

    /// Segment ends and single endpoints; where distances between subtrees are attained.
    std::vector<Point> boundary_points(const ContinuousGraph& g) const;

    /// `;`-separated items `e <edge> <lo> <hi>` / `v <id>`.
    std::string literal() const;

    friend bool operator==(const Subtree&, const Subtree&) = default;

private:
    std::vector<Segment> segments_;  // sorted by (edge, lo)
    std::vector<int> endpoints_;     // sorted
};

/// Connected and cycle-free.
bool subtree_valid(const ContinuousGraph& g, const Subtree& t);

/// Minimum point distance between two subtrees; 0 when they share a point.
Distance subtree_distance(const ContinuousGraph& g, const Subtree& a, const Subtree& b);

/// Pairwise subtree distance <= r. Throws InvalidInput if a subtree is not valid.
bool is_r_bramble(const ContinuousGraph& g, const Rational& r, const std::vector<Subtree>& subtrees);

struct BrambleOrder {
    int order = 0;
    std::vector<Point> hitting_set;
    SearchStatus status = SearchStatus::optimal;
    int lower_bound = 0;
};

/// Minimum hitting set. Candidates are the grid points of denominator D plus
/// every segment end, which already suffice: the intersection of segments on
/// one edge starts at some segment end.
BrambleOrder bramble_order(const ContinuousGraph& g, const std::vector<Subtree>& subtrees, std::int64_t denominator,
                           const SearchOptions& options = {});

struct BrambleCaps {
    int max_subtrees = 4;
    int max_segments = 2;
    int max_pool = 5000;  // grid-aligned subtrees kept for the search
};

struct BrambleNumberResult {
    int value = 0;
    std::vector<Subtree> witness;
    bool complete = true;  // false when a cap stopped the search or value reached max_subtrees; value is then a lower bound
    std::int64_t denominator = 0;
    BrambleCaps caps;
    int pool_size = 0;
    std::uint64_t nodes = 0;
};

/// All grid-aligned subtrees:  unions of at most max_segments segments [i/D, j/D].
std::vector<Subtree> grid_aligned_subtrees(const ContinuousGraph& g, std::int64_t denominator, int max_segments);

/// Largest order among r-brambles of at most max_subtrees grid-aligned subtrees.
/// Order never drops when a subtree is added and grows by at most one, which
/// bounds every partial bramble.
BrambleNumberResult r_bramble_number_bruteforce(const ContinuousGraph& g, const Rational& r, std::int64_t denominator,
                                                const BrambleCaps& caps = {}, const SearchOptions& options = {});

/// r = 1.
BrambleNumberResult treewidth_continuous(const ContinuousGraph& g, std::int64_t denominator, const BrambleCaps& caps = {},
                                         const SearchOptions& options = {});

}  // namespace contgraph
