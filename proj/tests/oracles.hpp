#pragma once

// Exhaustive reference implementations. Slow on purpose; they share no search
// code with the library and only use its exact verifiers and distance-free
// graph structure.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "contgraph/baselines.hpp"
#include "contgraph/bitset.hpp"
#include "contgraph/bramble.hpp"
#include "contgraph/covering.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/metric.hpp"
#include "contgraph/packing.hpp"
#include "contgraph/point.hpp"

namespace oracle {

using namespace contgraph;

inline constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

/// Distances between grid points in 1/D units, by Floyd-Warshall on the
/// graph with every edge cut into D pieces. Indices follow Grid ordering.
inline std::vector<std::vector<std::int64_t>> subdivided_distances(const ContinuousGraph& g, std::int64_t D)
{
    Grid grid(g, D);
    const int k = grid.size();
    std::vector<std::vector<std::int64_t>> d(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k), inf));
    for (int i = 0; i < k; ++i)
        d[i][i] = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<int> chain{grid.index_of(Point::endpoint(g.edge(e).u))};
        for (std::int64_t s = 1; s < D; ++s)
            chain.push_back(grid.index_of(Point::on_edge(g, e, Rational(s, D))));
        chain.push_back(grid.index_of(Point::endpoint(g.edge(e).v)));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            d[chain[i]][chain[i + 1]] = 1;
            d[chain[i + 1]][chain[i]] = 1;
        }
    }
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

/// Every labelled simple graph on n endpoints.
inline std::vector<ContinuousGraph> all_graphs(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<ContinuousGraph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1u)
                edges.push_back({slots[i].first, slots[i].second});
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

inline std::vector<Point> subset(const std::vector<Point>& pts, unsigned mask)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1u)
            out.push_back(pts[i]);
    return out;
}

inline int max_packing(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& candidates)
{
    const int k = static_cast<int>(candidates.size());
    std::vector<unsigned> clash(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !verify_packing(g, r, {candidates[i], candidates[j]}))
                clash[i] |= 1u << j;
    int best = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if ((mask >> i & 1u) && (clash[i] & mask))
                ok = false;
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// Smallest verified cover among subsets of the candidates, or -1.
inline int min_cover(const ContinuousGraph& g, const Rational& r, const std::vector<Point>& candidates)
{
    const int k = static_cast<int>(candidates.size());
    std::vector<unsigned> masks(1u << k);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned mask : masks)
        if (verify_cover(g, r, subset(candidates, mask)))
            return std::popcount(mask);
    return -1;
}

inline int min_hitting_set(const ContinuousGraph& g, const std::vector<Subtree>& subtrees, const std::vector<Point>& candidates)
{
    const int k = static_cast<int>(candidates.size());
    std::vector<unsigned> hits;
    for (const Subtree& t : subtrees) {
        unsigned h = 0;
        for (int c = 0; c < k; ++c)
            if (t.contains(g, candidates[c]))
                h |= 1u << c;
        hits.push_back(h);
    }
    int best = -1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (best >= 0 && std::popcount(mask) >= best)
            continue;
        if (std::all_of(hits.begin(), hits.end(), [&](unsigned h) { return (h & mask) != 0; }))
            best = std::popcount(mask);
    }
    return best;
}

/// Proper colouring of `n` vertices with at most c colours by trying all assignments.
inline bool colourable(int n, const std::vector<std::pair<int, int>>& edges, int c)
{
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int x = 0; x < c; ++x) {
            col[v] = x;
            bool ok = true;
            for (auto [a, b] : edges)
                if ((a == v && b < v && col[b] == x) || (b == v && a < v && col[a] == x))
                    ok = false;
            if (ok && go(v + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

/// Some cover by at most `budget` candidate balls of radius 1/2 admits a proper c-colouring.
inline bool colored_cover_exists(const ContinuousGraph& g, const std::vector<Point>& candidates, int c, int budget)
{
    const Rational half(1, 2);
    const int k = static_cast<int>(candidates.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) > budget)
            continue;
        std::vector<Point> centers = subset(candidates, mask);
        if (!verify_cover(g, half, centers))
            continue;
        std::vector<std::pair<int, int>> meet;
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = i + 1; j < centers.size(); ++j)
                if (!verify_packing(g, half, {centers[i], centers[j]}) || point_distance(g, centers[i], centers[j]) == Distance(Rational(1)))
                    meet.emplace_back(static_cast<int>(i), static_cast<int>(j));
        if (colourable(static_cast<int>(centers.size()), meet, c))
            return true;
    }
    return false;
}

inline std::vector<std::pair<int, int>> edge_pairs(const CombinatorialGraph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

inline int alpha(const CombinatorialGraph& g)
{
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
        bool ok = true;
        for (auto [u, v] : edge_pairs(g))
            if ((mask >> u & 1u) && (mask >> v & 1u))
                ok = false;
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline int beta(const CombinatorialGraph& g)
{
    int best = g.size();
    for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
        bool ok = true;
        for (auto [u, v] : edge_pairs(g))
            if (!(mask >> u & 1u) && !(mask >> v & 1u))
                ok = false;
        if (ok)
            best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline int chi(const CombinatorialGraph& g)
{
    for (int c = 1;; ++c)
        if (g.size() == 0 || colourable(g.size(), edge_pairs(g), c))
            return g.size() == 0 ? 0 : c;
}

inline int matching(const CombinatorialGraph& g)
{
    auto edges = edge_pairs(g);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        unsigned used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i)
            if (mask >> i & 1u) {
                unsigned both = (1u << edges[i].first) | (1u << edges[i].second);
                ok = (used & both) == 0;
                used |= both;
            }
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// Minimum over all elimination orders of the largest later-neighbourhood.
inline int treewidth(const CombinatorialGraph& g)
{
    const int n = g.size();
    if (n == 0)
        return -1;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
        for (auto [u, v] : edge_pairs(g))
            adj[u][v] = adj[v][u] = true;
        std::vector<bool> gone(static_cast<std::size_t>(n), false);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w])
                    nb.push_back(w);
            width = std::max(width, static_cast<int>(nb.size()));
            for (int a : nb)
                for (int b : nb)
                    if (a != b)
                        adj[a][b] = true;
            gone[v] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Maximum independent set size of symmetric conflict rows.
inline int mis(const std::vector<Bitset>& conflicts)
{
    const int k = static_cast<int>(conflicts.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            if (mask >> i & 1u)
                for (int j = i + 1; j < k; ++j)
                    if ((mask >> j & 1u) && conflicts[i].test(j))
                        ok = false;
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// Minimum set cover size, or -1 when some element has no candidate.
inline int set_cover(int num_candidates, const std::vector<Bitset>& element_candidates)
{
    int best = -1;
    for (unsigned mask = 0; mask < (1u << num_candidates); ++mask) {
        if (best >= 0 && std::popcount(mask) >= best)
            continue;
        bool ok = true;
        for (const Bitset& e : element_candidates) {
            bool hit = false;
            for (int c = 0; c < num_candidates && !hit; ++c)
                hit = (mask >> c & 1u) && e.test(c);
            ok = ok && hit;
        }
        if (ok)
            best = std::popcount(mask);
    }
    return best;
}

}  // namespace oracle
